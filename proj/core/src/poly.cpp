#include "polyaut/poly.hpp"

#include <algorithm>
#include <unordered_map>

namespace polyaut {

Monomial Monomial::variable(std::size_t n, std::size_t i, Exponent e) {
  Monomial m(n);
  m.exps_.at(i) = e;
  return m;
}

int Monomial::total_degree() const {
  int d = 0;
  for (auto e : exps_) d += static_cast<int>(e);
  return d;
}

bool Monomial::is_one() const {
  return std::all_of(exps_.begin(), exps_.end(), [](Exponent e) { return e == 0; });
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial out(*this);
  for (std::size_t i = 0; i < exps_.size(); ++i) out.exps_[i] += other.exps_[i];
  return out;
}

std::size_t Monomial::hash() const {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (auto e : exps_) {
    h ^= e + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

Poly Poly::constant(std::size_t n, const Rational& c) {
  Poly p(n);
  if (sgn(c) != 0) p.terms_.push_back({Monomial(n), c});
  return p;
}

Poly Poly::variable(std::size_t n, std::size_t i) {
  if (i >= n) throw DimensionError("variable index out of range");
  Poly p(n);
  p.terms_.push_back({Monomial::variable(n, i), 1});
  return p;
}

Poly Poly::monomial(Monomial m, const Rational& c) {
  Poly p(m.dimension());
  if (sgn(c) != 0) p.terms_.push_back({std::move(m), c});
  return p;
}

Poly Poly::from_terms(std::size_t n, std::vector<Term> terms) {
  for (const auto& t : terms) {
    if (t.monomial.dimension() != n) throw DimensionError("monomial dimension mismatch");
  }
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return a.monomial < b.monomial; });
  Poly p(n);
  p.terms_.reserve(terms.size());
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().monomial == t.monomial) {
      p.terms_.back().coefficient += t.coefficient;
      if (sgn(p.terms_.back().coefficient) == 0) p.terms_.pop_back();
    } else if (sgn(t.coefficient) != 0) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

bool Poly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.front().monomial.is_one());
}

Rational Poly::coefficient(const Monomial& m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                             [](const Term& t, const Monomial& key) { return t.monomial < key; });
  if (it != terms_.end() && it->monomial == m) return it->coefficient;
  return 0;
}

Rational Poly::constant_term() const {
  if (!terms_.empty() && terms_.front().monomial.is_one()) return terms_.front().coefficient;
  return 0;
}

int Poly::total_degree() const {
  int d = kZeroDegree;
  for (const auto& t : terms_) d = std::max(d, t.monomial.total_degree());
  return d;
}

Monomial::Exponent Poly::degree_in(std::size_t i) const {
  if (i >= n_) throw DimensionError("variable index out of range");
  Monomial::Exponent d = 0;
  for (const auto& t : terms_) d = std::max(d, t.monomial[i]);
  return d;
}

void Poly::check_same_dimension(const Poly& q, const char* op) const {
  if (n_ != q.n_) {
    throw DimensionError(std::string(op) + ": dimension mismatch (" + std::to_string(n_) +
                         " vs " + std::to_string(q.n_) + ")");
  }
}

Poly Poly::operator-() const {
  Poly out(*this);
  for (auto& t : out.terms_) t.coefficient = -t.coefficient;
  return out;
}

Poly& Poly::operator+=(const Poly& q) {
  check_same_dimension(q, "add");
  std::vector<Term> merged;
  merged.reserve(terms_.size() + q.terms_.size());
  auto a = terms_.begin();
  auto b = q.terms_.begin();
  while (a != terms_.end() || b != q.terms_.end()) {
    if (b == q.terms_.end() || (a != terms_.end() && a->monomial < b->monomial)) {
      merged.push_back(std::move(*a++));
    } else if (a == terms_.end() || b->monomial < a->monomial) {
      merged.push_back(*b++);
    } else {
      Rational c = a->coefficient + b->coefficient;
      if (sgn(c) != 0) merged.push_back({std::move(a->monomial), std::move(c)});
      ++a;
      ++b;
    }
  }
  terms_ = std::move(merged);
  return *this;
}

Poly& Poly::operator-=(const Poly& q) {
  check_same_dimension(q, "sub");
  return *this += -q;
}

Poly& Poly::operator*=(const Rational& c) {
  if (sgn(c) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.coefficient *= c;
  return *this;
}

namespace {

// Integer image of a polynomial: p = terms / denominator.
struct Scaled {
  std::vector<std::pair<const Monomial*, Integer>> terms;
  Integer denominator = 1;
};

Scaled scale_to_integers(std::span<const Term> terms) {
  Scaled out;
  for (const auto& t : terms) {
    mpz_lcm(out.denominator.get_mpz_t(), out.denominator.get_mpz_t(), t.coefficient.get_den_mpz_t());
  }
  out.terms.reserve(terms.size());
  for (const auto& t : terms) {
    Integer c = out.denominator / t.coefficient.get_den();
    c *= t.coefficient.get_num();
    out.terms.emplace_back(&t.monomial, std::move(c));
  }
  return out;
}

Poly from_integer_accumulator(std::size_t n, std::unordered_map<Monomial, Integer, MonomialHash>& acc,
                              const Integer& denominator) {
  std::vector<Term> terms;
  terms.reserve(acc.size());
  for (auto& [m, c] : acc) {
    if (sgn(c) == 0) continue;
    Rational q(c, denominator);
    q.canonicalize();
    terms.push_back({m, std::move(q)});
  }
  return Poly::from_terms(n, std::move(terms));
}

}  // namespace

Poly operator*(const Poly& p, const Poly& q) {
  p.check_same_dimension(q, "mul");
  if (p.is_zero() || q.is_zero()) return Poly(p.n_);
  if (q.is_constant()) return p * q.terms_.front().coefficient;
  if (p.is_constant()) return q * p.terms_.front().coefficient;
  if (&p == &q) return p.square();

  // Multiply integer images so the inner loop is a single mpz_addmul.
  const Scaled a = scale_to_integers(p.terms_);
  const Scaled b = scale_to_integers(q.terms_);
  std::unordered_map<Monomial, Integer, MonomialHash> acc;
  acc.reserve(p.size() * q.size() / 2 + 1);
  for (const auto& [ma, ca] : a.terms) {
    for (const auto& [mb, cb] : b.terms) {
      auto [it, inserted] = acc.try_emplace(*ma * *mb);
      mpz_addmul(it->second.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
    }
  }
  return from_integer_accumulator(p.n_, acc, a.denominator * b.denominator);
}

Poly Poly::square() const {
  if (is_zero()) return Poly(n_);
  if (is_constant()) return Poly::constant(n_, terms_.front().coefficient * terms_.front().coefficient);
  const Scaled a = scale_to_integers(terms_);
  std::unordered_map<Monomial, Integer, MonomialHash> acc;
  acc.reserve(size() * size() / 4 + 1);
  Integer twice;
  for (std::size_t i = 0; i < a.terms.size(); ++i) {
    const auto& [mi, ci] = a.terms[i];
    auto [diag, inserted] = acc.try_emplace(*mi * *mi);
    mpz_addmul(diag->second.get_mpz_t(), ci.get_mpz_t(), ci.get_mpz_t());
    twice = ci * 2;
    for (std::size_t j = i + 1; j < a.terms.size(); ++j) {
      const auto& [mj, cj] = a.terms[j];
      auto [it, fresh] = acc.try_emplace(*mi * *mj);
      mpz_addmul(it->second.get_mpz_t(), twice.get_mpz_t(), cj.get_mpz_t());
    }
  }
  return from_integer_accumulator(n_, acc, a.denominator * a.denominator);
}

Poly Poly::pow(unsigned e) const {
  Poly result = Poly::constant(n_, 1);
  Poly base = *this;
  while (e > 0) {
    if (e & 1U) result = result * base;
    e >>= 1U;
    if (e > 0) base = base.square();
  }
  return result;
}

bool Poly::operator==(const Poly& q) const {
  if (n_ != q.n_ || terms_.size() != q.terms_.size()) return false;
  for (std::size_t k = 0; k < terms_.size(); ++k) {
    if (terms_[k].monomial != q.terms_[k].monomial ||
        terms_[k].coefficient != q.terms_[k].coefficient) {
      return false;
    }
  }
  return true;
}

PowerTable::PowerTable(std::span<const Poly> args)
    : target_dim_(args.empty() ? 0 : args.front().dimension()) {
  powers_.reserve(args.size());
  for (const auto& a : args) {
    if (a.dimension() != target_dim_) {
      throw DimensionError("substitution arguments must share one dimension");
    }
    powers_.push_back({Poly::constant(target_dim_, 1), a});
  }
}

const Poly& PowerTable::power(std::size_t i, Monomial::Exponent e) {
  auto& row = powers_.at(i);
  while (row.size() <= e) {
    const std::size_t k = row.size();
    row.push_back(k % 2 == 0 ? row[k / 2].square() : row.back() * row[1]);
  }
  return row[e];
}

namespace {

// Horner evaluation over the lex-sorted term range [first, last), all of whose
// terms agree in the exponents of the variables before `var`. Every product
// is (partial result) * (small power of one argument), which avoids the
// intermediate swell of multiplying whole power products together.
Poly horner(std::span<const Term> terms, std::size_t var, PowerTable& table) {
  const std::size_t m = table.target_dimension();
  if (var == table.arity()) {
    // Only one term can remain once every exponent is fixed.
    return Poly::constant(m, terms.front().coefficient);
  }
  Poly acc(m);
  Monomial::Exponent pending = 0;  // power of arg[var] still owed by acc
  std::size_t end = terms.size();
  while (end > 0) {
    const auto e = terms[end - 1].monomial[var];
    std::size_t begin = end - 1;
    while (begin > 0 && terms[begin - 1].monomial[var] == e) --begin;
    if (!acc.is_zero() && pending > e) acc = acc * table.power(var, pending - e);
    acc += horner(terms.subspan(begin, end - begin), var + 1, table);
    pending = e;
    end = begin;
  }
  if (pending > 0) acc = acc * table.power(var, pending);
  return acc;
}

}  // namespace

Poly substitute(const Poly& p, PowerTable& table) {
  if (table.arity() != p.dimension()) {
    throw DimensionError("substitute: expected " + std::to_string(p.dimension()) +
                         " arguments, got " + std::to_string(table.arity()));
  }
  if (p.is_zero()) return Poly(table.target_dimension());
  return horner(p.terms(), 0, table);
}

Poly substitute(const Poly& p, std::span<const Poly> args) {
  if (args.size() != p.dimension()) {
    throw DimensionError("substitute: expected " + std::to_string(p.dimension()) +
                         " arguments, got " + std::to_string(args.size()));
  }
  if (args.empty()) return p;
  PowerTable table(args);
  return substitute(p, table);
}

Poly partial_derivative(const Poly& p, std::size_t i) {
  if (i >= p.dimension()) throw DimensionError("partial_derivative: index out of range");
  std::vector<Term> out;
  for (const auto& t : p.terms()) {
    const auto e = t.monomial[i];
    if (e == 0) continue;
    Monomial m = t.monomial;
    m[i] = e - 1;
    out.push_back({std::move(m), t.coefficient * e});
  }
  return Poly::from_terms(p.dimension(), std::move(out));
}

}  // namespace polyaut
