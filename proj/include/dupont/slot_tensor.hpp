#pragma once

#include "dupont/complexes.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

namespace dupont {

// One tensor factor living on a single coordinate slot: either a 1-d monomial
// form x^e (dx) on the whole interval or on one half of it, or a cell of a
// 1-d complex (a cochain basis element).
struct SlotElem {
  enum class Kind : std::uint8_t { Form, Cell };
  // Form pieces: kWhole = [0,1], 0 = [0,1/2], 1 = [1/2,1].
  static constexpr int kWhole = -1;

  Kind kind = Kind::Form;
  int piece = kWhole;
  int exponent = 0;
  bool dx = false;
  Simplex cell;

  static SlotElem form(int exponent, bool dx, int piece = kWhole) {
    return SlotElem{Kind::Form, piece, exponent, dx, {}};
  }
  static SlotElem of_cell(Simplex c) { return SlotElem{Kind::Cell, kWhole, 0, false, std::move(c)}; }

  int degree() const { return kind == Kind::Form ? (dx ? 1 : 0) : cell.dim(); }
  auto operator<=>(const SlotElem&) const = default;
};

std::string to_string(const SlotElem& e, int slot);

using SlotSum = std::vector<std::pair<SlotElem, Scalar>>;

// Sums of pure tensors a_1 (x) ... (x) a_n.
class SlotTensor {
 public:
  using Term = std::vector<SlotElem>;
  using Terms = std::map<Term, Scalar>;

  SlotTensor() = default;
  static SlotTensor pure(Term t, const Scalar& c = Scalar(1));

  void add(const Term& t, const Scalar& c);
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  SlotTensor& operator+=(const SlotTensor& o);
  SlotTensor& operator-=(const SlotTensor& o);
  SlotTensor& operator*=(const Scalar& k);
  friend SlotTensor operator+(SlotTensor a, const SlotTensor& b) { return a += b; }
  friend SlotTensor operator-(SlotTensor a, const SlotTensor& b) { return a -= b; }
  friend SlotTensor operator*(const Scalar& k, SlotTensor a) { return a *= k; }
  friend bool operator==(const SlotTensor& a, const SlotTensor& b) = default;

 private:
  Terms terms_;
};

std::string to_string(const SlotTensor& t);

// A graded linear operator on one slot.
struct SlotOp {
  int degree = 0;
  std::function<SlotSum(const SlotElem&)> f;
};

SlotOp identity_op();
SlotOp compose(const SlotOp& outer, const SlotOp& inner);

// (f_1 (x) ... (x) f_n)(a_1 (x) ... (x) a_n)
//   = (-1)^{sum_j |f_j| sum_{i<j} |a_i|} f_1(a_1) (x) ... (x) f_n(a_n).
SlotTensor apply_slots(const std::vector<SlotOp>& ops, const SlotTensor& t);

// sum_j 1 (x) .. (x) f_j (x) .. (x) 1: a derivation such as d.
SlotTensor apply_derivation(const std::vector<SlotOp>& per_slot, const SlotTensor& t);

// Moves slot i to position sigma[i], with the Koszul sign of the odd factors.
SlotTensor permute_slots(const SlotTensor& t, const std::vector<int>& sigma);
std::vector<int> inverse_permutation(const std::vector<int>& sigma);

}  // namespace dupont
