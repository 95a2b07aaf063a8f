#pragma once

namespace qring {

enum class BoundaryKind { Linear, Twisted };

// Corner-phase sign convention for the twisted operator. FigureB1 (the
// default) puts the exact plane-wave modes at k = delta_alpha/(2*pi) + n;
// PaperLiteral conjugates the corner phases, which mirrors the spectrum
// (modes at k = n - delta_alpha/(2*pi)).
enum class BoundarySign { PaperLiteral, FigureB1 };

// Sign of the seam continuation phase: the twisted stencil wraps as
// v[0] <- exp(+i*delta_alpha*sigma) * v[r-1] and
// v[r+1] <- exp(-i*delta_alpha*sigma) * v[1] (1-based).
inline constexpr double wrap_sign(BoundarySign s) {
  return s == BoundarySign::PaperLiteral ? 1.0 : -1.0;
}

struct BoundarySpec {
  BoundaryKind kind = BoundaryKind::Linear;
  double delta_alpha = 0.0;
  BoundarySign sign = BoundarySign::FigureB1;

  static BoundarySpec linear() { return {}; }
  static BoundarySpec twisted(double delta_alpha,
                              BoundarySign sign = BoundarySign::FigureB1) {
    return {BoundaryKind::Twisted, delta_alpha, sign};
  }
};

}  // namespace qring
