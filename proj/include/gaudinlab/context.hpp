#ifndef GAUDINLAB_CONTEXT_HPP
#define GAUDINLAB_CONTEXT_HPP

#include <memory>
#include <string>
#include <vector>

#include "gaudinlab/errors.hpp"

namespace gaudinlab {

enum class VarKind { X, Y, T, Q };

// A variable of the ambient ring: x_1..x_nx, y_1..y_ny, and the two
// deformation parameters t, q. Indices are 1-based to match the usual
// notation x_1, y_2, ...
struct Var {
  VarKind kind;
  int index;  // 1-based for X/Y, ignored for T/Q

  static Var x(int i) { return {VarKind::X, i}; }
  static Var y(int i) { return {VarKind::Y, i}; }
  static Var t() { return {VarKind::T, 0}; }
  static Var q() { return {VarKind::Q, 0}; }

  friend bool operator==(const Var& a, const Var& b) {
    return a.kind == b.kind && a.index == b.index;
  }
};

// Fixed, totally ordered variable universe shared by every polynomial of a
// computation. Slot layout: x_1..x_nx, y_1..y_ny, t, q. Contexts are
// immutable and shared by pointer; mixing polynomials from different
// contexts is a logic error.
class VariableContext {
 public:
  using Ptr = std::shared_ptr<const VariableContext>;

  // x_count = 0 is the degenerate case every consumer rejects; refuse it
  // here. y_count may be zero (pure-x operator work sizes no y at all).
  static Ptr make(int x_count, int y_count) {
    if (x_count < 1) throw BoundExceeded("context needs at least one x variable");
    if (y_count < 0) throw BoundExceeded("negative y_count");
    return Ptr(new VariableContext(x_count, y_count));
  }

  // Context holding only the parameters t, q: the coefficient field of the
  // q,t-symmetric-function layer.
  static Ptr parameters_only() { return Ptr(new VariableContext(0, 0)); }

  int x_count() const { return nx_; }
  int y_count() const { return ny_; }
  int size() const { return nx_ + ny_ + 2; }

  int slot(const Var& v) const {
    switch (v.kind) {
      case VarKind::X:
        if (v.index < 1 || v.index > nx_) throw IndexOutOfRange("x index " + std::to_string(v.index));
        return v.index - 1;
      case VarKind::Y:
        if (v.index < 1 || v.index > ny_) throw IndexOutOfRange("y index " + std::to_string(v.index));
        return nx_ + v.index - 1;
      case VarKind::T:
        return nx_ + ny_;
      case VarKind::Q:
        return nx_ + ny_ + 1;
    }
    throw IndexOutOfRange("bad variable kind");
  }

  int t_slot() const { return nx_ + ny_; }
  int q_slot() const { return nx_ + ny_ + 1; }

  bool is_x_slot(int s) const { return s >= 0 && s < nx_; }
  bool is_y_slot(int s) const { return s >= nx_ && s < nx_ + ny_; }

  std::string slot_name(int s) const {
    if (s < 0 || s >= size()) throw IndexOutOfRange("slot " + std::to_string(s));
    if (s < nx_) return "x" + std::to_string(s + 1);
    if (s < nx_ + ny_) return "y" + std::to_string(s - nx_ + 1);
    return s == nx_ + ny_ ? "t" : "q";
  }

 private:
  VariableContext(int nx, int ny) : nx_(nx), ny_(ny) {}
  int nx_;
  int ny_;
};

inline void require_same_context(const VariableContext::Ptr& a, const VariableContext::Ptr& b) {
  if (a.get() != b.get()) throw ContextMismatch("operands from different variable contexts");
}

}  // namespace gaudinlab

#endif
