#pragma once

#include <optional>

#include "cgt/matgroup.hpp"

namespace cgt {

enum class ClassicalFamily { GL, SL, SP, GU, GO };
enum class ClassicalVariant { Plain, TauExtended, Conformal };
enum class FormSign { Plus, Minus, Circle };

struct ClassicalGroup {
  ClassicalFamily family = ClassicalFamily::GL;
  ClassicalVariant variant = ClassicalVariant::Plain;
  FormSign sign = FormSign::Circle;
  u32 n = 0;
  u64 q = 0;             // defining parameter; GU lives over GF(q^2)
  Field field;           // the matrix field
  u32 frobenius_power = 0;  // sigma = x -> x^(p^frobenius_power) for GU, else 0
  std::optional<Mat> gram;
  std::vector<Mat> elements;  // every element (these instances are desk-scale)
  MatGroup group;             // generated by a small subset, order-checked
  u64 formula_order = 0;
};

// Element sets come from Gram-constrained row completion (GL/SL from linear
// independence); the count is checked against the classical order formula
// and the generators are a greedy generating subset of the element list.
ClassicalGroup classical(ClassicalFamily family, u32 n, u64 q,
                         ClassicalVariant variant = ClassicalVariant::Plain,
                         FormSign sign = FormSign::Circle);

u64 classical_order_formula(ClassicalFamily family, u32 n, u64 q, FormSign sign);

// x -> (x^tr)^-1
Mat transpose_inverse(const Mat& m);

// Elements of GL(n, field) preserving the form up to the given scales
// (scale 1 only = the isometry group). Hermitian forms twist the second
// argument by sigma = p^frobenius_power.
std::vector<Mat> form_preservers(const Field& field, u32 n, const Mat& gram,
                                 u32 frobenius_power, const std::vector<u64>& scales);

struct RealClassReport {
  std::string label;
  u64 checked = 0;
  bool all_real = false;
  std::optional<Mat> counterexample;
};

// For every g in the base group: is some x in the (possibly extended) group
// with x^-1 g x = g^-1? Tau-coset elements act as g -> m^-1 (g^tr)^-1 m.
RealClassReport real_classes_check(const ClassicalGroup& cg);

}  // namespace cgt
