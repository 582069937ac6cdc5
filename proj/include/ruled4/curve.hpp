#pragma once

#include <array>
#include <functional>
#include <string>
#include <vector>

#include "ruled4/expr.hpp"
#include "ruled4/lorentz.hpp"

namespace ruled4 {

// Position and first two derivatives of a curve at a parameter value.
struct CurveJet {
  Vec4 p;
  Vec4 d1;
  Vec4 d2;
};

Quad<Jet2> to_jets(const CurveJet& c);
CurveJet from_jets(const Quad<Jet2>& j);

// Four component expressions in t.
struct CurveSpec {
  std::array<Expr, 4> comp;
  std::array<std::string, 4> source;

  static CurveSpec parse(const std::array<std::string, 4>& texts);
  static CurveSpec parse(const std::vector<std::string>& texts);
};

CurveJet curve_eval(const CurveSpec& c, double t);

// A curve in R^4_1 known through its jets. Either a parsed CurveSpec or a
// curve materialized from other curves (e.g. a sum of ternary products).
class Curve {
 public:
  using JetFn = std::function<CurveJet(double)>;

  Curve(JetFn fn, std::string label) : fn_(std::move(fn)), label_(std::move(label)) {}
  explicit Curve(CurveSpec spec);

  CurveJet operator()(double t) const { return fn_(t); }
  const std::string& label() const { return label_; }

 private:
  JetFn fn_;
  std::string label_;
};

struct Interval {
  double lo = 0.0;
  double hi = 1.0;
  int n = 2;

  double at(int i) const;
};

struct DirectorReport {
  ModelSpace constraint = ModelSpace::DeSitter3;
  double max_violation = 0.0;   // max |<c,c> - target|
  double worst_quadratic = 0.0; // <c,c> at the worst sample
  double worst_t = 0.0;
  bool sign_ok = true;          // slot-0 condition (H3+: > 0, LC: != 0)
  bool pass = true;
};

// Samples <c(t),c(t)> over the grid against the model space; tolerance 1e-9.
DirectorReport validate_director(const Curve& c, ModelSpace constraint, const Interval& samples);

}  // namespace ruled4
