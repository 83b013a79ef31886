#include "dupont/poly_form.hpp"

#include <bit>
#include <sstream>
#include <stdexcept>

namespace dupont {

int popcount(std::uint32_t x) { return std::popcount(x); }

int TermKey::form_degree() const { return popcount(wedge); }

int TermKey::poly_degree() const {
  int d = 0;
  for (auto e : exps) d += e;
  return d;
}

bool TermKeyLess::operator()(const TermKey& a, const TermKey& b) const {
  const int da = popcount(a.wedge), db = popcount(b.wedge);
  if (da != db) return da < db;
  if (a.wedge != b.wedge) {
    // lowest differing index decides: the set containing it sorts first
    const std::uint32_t diff = a.wedge ^ b.wedge;
    const std::uint32_t low = diff & (~diff + 1);
    return (a.wedge & low) != 0;
  }
  return a.exps < b.exps;
}

int wedge_sign(std::uint32_t a, std::uint32_t b) {
  if (a & b) return 0;
  // count pairs (i in a, j in b) with i > j
  int inversions = 0;
  for (std::uint32_t rest = b; rest; rest &= rest - 1) {
    const std::uint32_t j = rest & (~rest + 1);
    inversions += popcount(a & ~((j << 1) - 1));
  }
  return inversions % 2 ? -1 : 1;
}

PolyForm::PolyForm(int num_vars) : nv_(num_vars) {
  if (num_vars < 0 || num_vars > kMaxVars) throw std::invalid_argument("too many variables");
}

PolyForm PolyForm::constant(int num_vars, const Scalar& c) {
  PolyForm f(num_vars);
  f.add_term(TermKey{}, c);
  return f;
}

PolyForm PolyForm::coordinate(int num_vars, int i) {
  if (i < 0 || i >= num_vars) throw std::out_of_range("coordinate index");
  TermKey k;
  k.exps[i] = 1;
  PolyForm f(num_vars);
  f.add_term(k, 1);
  return f;
}

PolyForm PolyForm::differential(int num_vars, int i) {
  if (i < 0 || i >= num_vars) throw std::out_of_range("differential index");
  PolyForm f(num_vars);
  f.add_term(TermKey{1u << i, {}}, 1);
  return f;
}

PolyForm PolyForm::monomial(int num_vars, const Scalar& c, const Exponents& e, std::uint32_t wedge) {
  PolyForm f(num_vars);
  f.add_term(TermKey{wedge, e}, c);
  return f;
}

void PolyForm::add_term(const TermKey& k, const Scalar& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(k, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

int PolyForm::degree() const {
  int d = -1;
  for (const auto& [k, c] : terms_) {
    const int e = k.form_degree();
    if (d == -1) {
      d = e;
    } else if (d != e) {
      return -1;
    }
  }
  return d;
}

int PolyForm::max_poly_degree() const {
  int d = 0;
  for (const auto& [k, c] : terms_) d = std::max(d, k.poly_degree());
  return d;
}

PolyForm PolyForm::homogeneous_part(int p) const {
  PolyForm out(nv_);
  for (const auto& [k, c] : terms_)
    if (k.form_degree() == p) out.terms_.emplace(k, c);
  return out;
}

void PolyForm::check_same(const PolyForm& o) const {
  if (nv_ != o.nv_) throw std::invalid_argument("forms on different spaces");
}

PolyForm& PolyForm::operator+=(const PolyForm& o) {
  check_same(o);
  for (const auto& [k, c] : o.terms_) add_term(k, c);
  return *this;
}

PolyForm& PolyForm::operator-=(const PolyForm& o) {
  check_same(o);
  for (const auto& [k, c] : o.terms_) add_term(k, -c);
  return *this;
}

PolyForm& PolyForm::operator*=(const Scalar& k) {
  if (k == 0) {
    terms_.clear();
  } else {
    for (auto& [key, c] : terms_) c *= k;
  }
  return *this;
}

PolyForm wedge(const PolyForm& a, const PolyForm& b) {
  if (a.num_vars() != b.num_vars()) throw std::invalid_argument("wedge: forms on different spaces");
  PolyForm out(a.num_vars());
  for (const auto& [ka, ca] : a.terms()) {
    for (const auto& [kb, cb] : b.terms()) {
      const int s = wedge_sign(ka.wedge, kb.wedge);
      if (s == 0) continue;
      TermKey k{ka.wedge | kb.wedge, {}};
      for (int i = 0; i < kMaxVars; ++i) {
        const int e = ka.exps[i] + kb.exps[i];
        if (e > 255) throw std::overflow_error("exponent overflow");
        k.exps[i] = static_cast<std::uint8_t>(e);
      }
      out.add_term(k, s > 0 ? Scalar(ca * cb) : Scalar(-ca * cb));
    }
  }
  return out;
}

PolyForm exterior_derivative(const PolyForm& a) {
  PolyForm out(a.num_vars());
  for (const auto& [k, c] : a.terms()) {
    for (int i = 0; i < a.num_vars(); ++i) {
      if (k.exps[i] == 0 || (k.wedge & (1u << i))) continue;
      TermKey nk = k;
      nk.exps[i] -= 1;
      nk.wedge |= 1u << i;
      // dy_i moves past the wedge factors with smaller index
      const int below = popcount(k.wedge & ((1u << i) - 1));
      Scalar v = c * k.exps[i];
      out.add_term(nk, below % 2 ? Scalar(-v) : v);
    }
  }
  return out;
}

PolyForm interior_product(const std::vector<PolyForm>& field, const PolyForm& a) {
  if (static_cast<int>(field.size()) != a.num_vars())
    throw std::invalid_argument("vector field size mismatch");
  PolyForm out(a.num_vars());
  for (const auto& [k, c] : a.terms()) {
    int pos = 0;
    for (int i = 0; i < a.num_vars(); ++i) {
      if (!(k.wedge & (1u << i))) continue;
      TermKey rest = k;
      rest.wedge &= ~(1u << i);
      PolyForm piece(a.num_vars());
      piece.add_term(rest, pos % 2 ? Scalar(-c) : c);
      out += wedge(field[i], piece);
      ++pos;
    }
  }
  return out;
}

AffineMap AffineMap::linear_only(const DenseMatrix<Scalar>& m) {
  return {static_cast<int>(m.cols()), m, std::vector<Scalar>(m.rows(), Scalar(0))};
}

PolyForm pullback(const PolyForm& a, const AffineMap& f) {
  const int old_vars = a.num_vars();
  if (f.linear.rows() != old_vars || static_cast<int>(f.offset.size()) != old_vars ||
      f.linear.cols() != f.new_vars)
    throw std::invalid_argument("pullback: map shape mismatch");
  const int nv = f.new_vars;
  std::vector<PolyForm> coord, diff;
  for (int i = 0; i < old_vars; ++i) {
    PolyForm c = PolyForm::constant(nv, f.offset[i]);
    PolyForm d(nv);
    for (int j = 0; j < nv; ++j) {
      if (f.linear(i, j) == 0) continue;
      c += f.linear(i, j) * PolyForm::coordinate(nv, j);
      d += f.linear(i, j) * PolyForm::differential(nv, j);
    }
    coord.push_back(std::move(c));
    diff.push_back(std::move(d));
  }
  std::vector<std::vector<PolyForm>> powers(old_vars);
  auto power = [&](int i, int e) -> const PolyForm& {
    auto& p = powers[i];
    if (p.empty()) p.push_back(PolyForm::constant(nv, 1));
    while (static_cast<int>(p.size()) <= e) p.push_back(wedge(p.back(), coord[i]));
    return p[e];
  };
  PolyForm out(nv);
  for (const auto& [k, c] : a.terms()) {
    PolyForm t = PolyForm::constant(nv, c);
    for (int i = 0; i < old_vars; ++i)
      if (k.exps[i]) t = wedge(t, power(i, k.exps[i]));
    for (int i = 0; i < old_vars && !t.is_zero(); ++i)
      if (k.wedge & (1u << i)) t = wedge(t, diff[i]);
    out += t;
  }
  return out;
}

Scalar evaluate(const PolyForm& a, const std::vector<Scalar>& point) {
  if (static_cast<int>(point.size()) != a.num_vars()) throw std::invalid_argument("point size");
  Scalar acc = 0;
  for (const auto& [k, c] : a.terms()) {
    if (k.wedge) continue;
    Scalar v = c;
    for (int i = 0; i < a.num_vars(); ++i)
      for (int e = 0; e < k.exps[i]; ++e) v *= point[i];
    acc += v;
  }
  return acc;
}

PolyForm extend_vars(const PolyForm& a, int num_vars) {
  if (num_vars < a.num_vars()) throw std::invalid_argument("extend_vars: shrinking");
  PolyForm out(num_vars);
  for (const auto& [k, c] : a.terms()) out.add_term(k, c);
  return out;
}

std::string to_string(const PolyForm& a, std::string_view var, int index_base) {
  if (a.is_zero()) return "0";
  std::string out;
  for (const auto& [k, c] : a.terms()) {
    if (!out.empty()) out += " + ";
    out += c.str();
    for (int i = 0; i < a.num_vars(); ++i) {
      if (!k.exps[i]) continue;
      out += "*" + std::string(var) + std::to_string(i + index_base);
      if (k.exps[i] > 1) out += "^" + std::to_string(k.exps[i]);
    }
    bool first = true;
    for (int i = 0; i < a.num_vars(); ++i) {
      if (!(k.wedge & (1u << i))) continue;
      out += first ? "*" : "^";
      out += "d" + std::string(var) + std::to_string(i + index_base);
      first = false;
    }
  }
  return out;
}

namespace {

std::vector<std::string> split(std::string_view s, std::string_view sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = s.find(sep, start);
    out.emplace_back(s.substr(start, pos == std::string_view::npos ? pos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + sep.size();
  }
  return out;
}

int parse_index(std::string_view tok, std::string_view prefix, int num_vars, int index_base) {
  if (tok.substr(0, prefix.size()) != prefix) return -1;
  std::string rest(tok.substr(prefix.size()));
  if (rest.empty() && num_vars == 1) return 0;
  if (rest.empty() ||rest.find_first_not_of("0123456789") != std::string::npos) return -1;
  const int i = std::stoi(rest) - index_base;
  if (i < 0 || i >= num_vars) throw std::invalid_argument("variable out of range: " + std::string(tok));
  return i;
}

}  // namespace

PolyForm parse_poly_form(std::string_view text, int num_vars, std::string_view var, int index_base) {
  PolyForm out(num_vars);
  if (text == "0") return out;
  const std::string dvar = "d" + std::string(var);
  for (const std::string& term : split(text, " + ")) {
    Scalar coef = 1;
    TermKey key;
    int wedge_sign_acc = 1;
    auto factors = split(term, "*");
    for (std::size_t f = 0; f < factors.size(); ++f) {
      const std::string& tok = factors[f];
      if (tok.empty()) throw std::invalid_argument("bad term: " + term);
      if (f == 0 && (std::isdigit(static_cast<unsigned char>(tok[0])) || tok[0] == '-')) {
        coef = parse_scalar(tok);
        continue;
      }
      if (tok.rfind(dvar, 0) == 0) {
        for (const std::string& w : split(tok, "^")) {
          const int i = parse_index(w, dvar, num_vars, index_base);
          if (i < 0) throw std::invalid_argument("bad differential: " + w);
          const int s = wedge_sign(key.wedge, 1u << i);
          if (s == 0) {
            wedge_sign_acc = 0;
          } else {
            wedge_sign_acc *= s;
            key.wedge |= 1u << i;
          }
        }
        continue;
      }
      auto parts = split(tok, "^");
      if (parts.size() > 2) throw std::invalid_argument("bad factor: " + tok);
      const int i = parse_index(parts[0], var, num_vars, index_base);
      if (i < 0) throw std::invalid_argument("bad factor: " + tok);
      const int e = parts.size() == 2 ? std::stoi(parts[1]) : 1;
      key.exps[i] = static_cast<std::uint8_t>(key.exps[i] + e);
    }
    out.add_term(key, coef * wedge_sign_acc);
  }
  return out;
}

}  // namespace dupont
