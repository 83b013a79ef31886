#include "dupont/slot_tensor.hpp"

#include <numeric>
#include <stdexcept>

namespace dupont {

std::string to_string(const SlotElem& e, int slot) {
  if (e.kind == SlotElem::Kind::Cell) return to_string(e.cell) + "^";
  const std::string x = "x" + std::to_string(slot + 1);
  std::string out;
  if (e.exponent == 0 && !e.dx) out = "1";
  if (e.exponent > 0) out = x + (e.exponent > 1 ? "^" + std::to_string(e.exponent) : "");
  if (e.dx) out += (out.empty() ? "" : "*") + ("d" + x);
  if (e.piece != SlotElem::kWhole) out += e.piece == 0 ? "[0,1/2]" : "[1/2,1]";
  return out;
}

SlotTensor SlotTensor::pure(Term t, const Scalar& c) {
  SlotTensor out;
  out.add(t, c);
  return out;
}

void SlotTensor::add(const Term& t, const Scalar& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(t, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

SlotTensor& SlotTensor::operator+=(const SlotTensor& o) {
  for (const auto& [t, c] : o.terms_) add(t, c);
  return *this;
}

SlotTensor& SlotTensor::operator-=(const SlotTensor& o) {
  for (const auto& [t, c] : o.terms_) add(t, -c);
  return *this;
}

SlotTensor& SlotTensor::operator*=(const Scalar& k) {
  if (k == 0) {
    terms_.clear();
  } else {
    for (auto& [t, c] : terms_) c *= k;
  }
  return *this;
}

std::string to_string(const SlotTensor& t) {
  if (t.is_zero()) return "0";
  std::string out;
  for (const auto& [term, c] : t.terms()) {
    if (!out.empty()) out += " + ";
    out += c.str();
    for (std::size_t i = 0; i < term.size(); ++i) out += (i ? " (x) " : " ") + to_string(term[i], int(i));
  }
  return out;
}

SlotOp identity_op() {
  return {0, [](const SlotElem& e) { return SlotSum{{e, Scalar(1)}}; }};
}

SlotOp compose(const SlotOp& outer, const SlotOp& inner) {
  return {outer.degree + inner.degree, [outer, inner](const SlotElem& e) {
            std::map<SlotElem, Scalar> acc;
            for (const auto& [mid, c] : inner.f(e))
              for (const auto& [out, k] : outer.f(mid)) acc[out] += c * k;
            SlotSum r;
            for (const auto& [el, c] : acc)
              if (c != 0) r.emplace_back(el, c);
            return r;
          }};
}

SlotTensor apply_slots(const std::vector<SlotOp>& ops, const SlotTensor& t) {
  SlotTensor out;
  for (const auto& [term, coef] : t.terms()) {
    if (term.size() != ops.size()) throw std::invalid_argument("slot count mismatch");
    int sign_exp = 0, left = 0;
    for (std::size_t j = 0; j < term.size(); ++j) {
      sign_exp += ops[j].degree * left;
      left += term[j].degree();
    }
    // cartesian product of the slot images
    std::vector<std::pair<SlotTensor::Term, Scalar>> partial{{{}, sign_exp % 2 ? Scalar(-coef) : coef}};
    for (std::size_t j = 0; j < term.size() && !partial.empty(); ++j) {
      const SlotSum img = ops[j].f(term[j]);
      std::vector<std::pair<SlotTensor::Term, Scalar>> next;
      for (const auto& [pre, c] : partial)
        for (const auto& [el, k] : img) {
          auto grown = pre;
          grown.push_back(el);
          next.emplace_back(std::move(grown), c * k);
        }
      partial = std::move(next);
    }
    for (const auto& [tt, c] : partial) out.add(tt, c);
  }
  return out;
}

SlotTensor apply_derivation(const std::vector<SlotOp>& per_slot, const SlotTensor& t) {
  SlotTensor out;
  const std::size_t n = per_slot.size();
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<SlotOp> ops(n, identity_op());
    ops[j] = per_slot[j];
    out += apply_slots(ops, t);
  }
  return out;
}

std::vector<int> inverse_permutation(const std::vector<int>& sigma) {
  std::vector<int> inv(sigma.size());
  for (std::size_t i = 0; i < sigma.size(); ++i) inv.at(sigma[i]) = static_cast<int>(i);
  return inv;
}

SlotTensor permute_slots(const SlotTensor& t, const std::vector<int>& sigma) {
  SlotTensor out;
  for (const auto& [term, c] : t.terms()) {
    if (term.size() != sigma.size()) throw std::invalid_argument("slot count mismatch");
    SlotTensor::Term moved(term.size());
    int odd_inversions = 0;
    for (std::size_t i = 0; i < term.size(); ++i) {
      moved.at(sigma[i]) = term[i];
      for (std::size_t j = i + 1; j < term.size(); ++j)
        if (sigma[i] > sigma[j] && term[i].degree() % 2 && term[j].degree() % 2) ++odd_inversions;
    }
    out.add(moved, odd_inversions % 2 ? Scalar(-c) : c);
  }
  return out;
}

}  // namespace dupont
