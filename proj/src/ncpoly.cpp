#include "involut/ncpoly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace involut {

NcPoly::NcPoly(std::size_t m, const Rational& constant) : m_(m) { add_term({}, constant); }

NcPoly NcPoly::variable(std::size_t m, int index) { return monomial(m, Word{index}); }

NcPoly NcPoly::monomial(std::size_t m, Word word, const Rational& coeff) {
  for (int v : word) {
    if (v < 0 || static_cast<std::size_t>(v) >= m) throw std::invalid_argument("variable index out of range");
  }
  NcPoly p(m);
  p.add_term(word, coeff);
  return p;
}

void NcPoly::add_term(const Word& w, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void NcPoly::check_vars(const NcPoly& o) const {
  if (m_ != o.m_) throw std::invalid_argument("polynomials in different numbers of variables");
}

std::size_t NcPoly::degree() const {
  std::size_t d = 0;
  for (const auto& [w, c] : terms_) d = std::max(d, w.size());
  return d;
}

NcPoly& NcPoly::operator+=(const NcPoly& o) {
  check_vars(o);
  for (const auto& [w, c] : o.terms_) add_term(w, c);
  return *this;
}

NcPoly& NcPoly::operator-=(const NcPoly& o) {
  check_vars(o);
  for (const auto& [w, c] : o.terms_) add_term(w, -c);
  return *this;
}

NcPoly& NcPoly::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, coeff] : terms_) coeff *= c;
  return *this;
}

NcPoly operator*(const NcPoly& a, const NcPoly& b) {
  a.check_vars(b);
  if (a.degree() + b.degree() > kMaxPolyDegree) throw std::length_error("polynomial degree cap exceeded");
  NcPoly out(a.m_);
  for (const auto& [wa, ca] : a.terms_) {
    for (const auto& [wb, cb] : b.terms_) {
      Word w = wa;
      w.insert(w.end(), wb.begin(), wb.end());
      out.add_term(w, ca * cb);
      if (out.terms_.size() > kMaxPolyTerms) throw std::length_error("polynomial term cap exceeded");
    }
  }
  return out;
}

NcPoly pow(const NcPoly& p, unsigned exponent) {
  NcPoly out(p.num_vars(), Rational(1));
  for (unsigned i = 0; i < exponent; ++i) out = out * p;
  return out;
}

std::string NcPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : terms_) {
    const bool negative = c.sign() < 0;
    const Rational mag = negative ? -c : c;
    if (first) {
      if (negative) os << "-";
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    const bool unit = mag == Rational(1);
    if (!unit || w.empty()) os << mag;
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (i > 0 || !unit) os << ' ';
      os << 'X' << (w[i] + 1);
    }
  }
  return os.str();
}

namespace {

class PolyParser {
 public:
  PolyParser(std::string_view text, std::size_t m) : text_(text), m_(m) {}

  NcPoly parse() {
    NcPoly out(m_);
    skip_space();
    if (at_end()) fail("empty polynomial");
    bool first = true;
    while (!at_end()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
        skip_space();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      out += term() * Rational(sign);
      skip_space();
    }
    return out;
  }

 private:
  NcPoly term() {
    Rational coeff(1);
    bool seen_factor = false;
    if (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      coeff = number();
      seen_factor = true;
    }
    NcPoly result(m_, coeff);
    for (;;) {
      skip_space();
      if (!at_end() && peek() == '*') {
        ++pos_;
        skip_space();
      }
      if (at_end() || (peek() != 'X' && peek() != 'x')) break;
      ++pos_;
      const std::size_t start = pos_;
      while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
      if (start == pos_) fail("variable without index");
      const long index = std::stol(std::string(text_.substr(start, pos_ - start)));
      if (index < 1 || static_cast<std::size_t>(index) > m_) fail("variable index out of range");
      unsigned exponent = 1;
      if (!at_end() && peek() == '^') {
        ++pos_;
        const std::size_t es = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        if (es == pos_) fail("missing exponent");
        exponent = static_cast<unsigned>(std::stoul(std::string(text_.substr(es, pos_ - es))));
      }
      result = result * pow(NcPoly::variable(m_, static_cast<int>(index - 1)), exponent);
      seen_factor = true;
    }
    if (!seen_factor) fail("expected a term");
    return result;
  }

  Rational number() {
    const std::size_t start = pos_;
    while (!at_end() && (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '/')) ++pos_;
    return Rational::parse(text_.substr(start, pos_ - start));
  }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("polynomial parse error at offset " + std::to_string(pos_) + ": " + what);
  }

  std::string_view text_;
  std::size_t m_;
  std::size_t pos_ = 0;
};

}  // namespace

NcPoly NcPoly::parse(std::string_view text, std::size_t m) { return PolyParser(text, m).parse(); }

NcPoly rho(const NcPoly& p) {
  NcPoly out(p.num_vars());
  for (const auto& [w, c] : p.terms()) {
    out += NcPoly::monomial(p.num_vars(), Word(w.rbegin(), w.rend()), c);
  }
  return out;
}

NcPoly sigma_tilde(const SignVector& signs, const NcPoly& p) {
  if (signs.size() != p.num_vars()) throw std::invalid_argument("sign vector length does not match polynomial");
  NcPoly out(p.num_vars());
  for (const auto& [w, c] : p.terms()) {
    int sign = 1;
    for (int v : w) sign *= signs[static_cast<std::size_t>(v)];
    out += NcPoly::monomial(p.num_vars(), Word(w.rbegin(), w.rend()), c * Rational(sign));
  }
  return out;
}

TraceIdentityResult trace_identity_test(const NcPoly& p, const NcPoly& q, Eigen::Index n, std::size_t trials,
                                        std::uint64_t seed) {
  if (trials < 1) throw std::invalid_argument("trace identity test needs at least one trial");
  if (p.num_vars() != q.num_vars()) throw std::invalid_argument("polynomials in different numbers of variables");
  TraceIdentityResult result;
  result.seed = seed;
  for (std::size_t t = 0; t < trials; ++t) {
    const std::uint64_t trial_seed = derive_seed(seed, t);
    const TupleQ a = sample_tuple(n, p.num_vars(), Family::Full, kTraceTestBound, trial_seed);
    const Rational lhs = trace_eval(p, a);
    const Rational rhs = trace_eval(q, a);
    result.trials_run = t + 1;
    if (lhs != rhs) {
      result.identity = false;
      result.counterexample = a;
      result.counterexample_seed = trial_seed;
      result.lhs_trace = lhs;
      result.rhs_trace = rhs;
      break;
    }
  }
  return result;
}

}  // namespace involut
