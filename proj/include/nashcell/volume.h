// Copyright 2026 The nashcell Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef NASHCELL_VOLUME_H_
#define NASHCELL_VOLUME_H_

#include <vector>

#include "nashcell/game.h"
#include "nashcell/scalar.h"
#include "nashcell/subdivision.h"

namespace nashcell {

// Dense univariate polynomial, coefficients in ascending degree.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Scalar> coefficients);
  static Polynomial Constant(Scalar c);
  // a + b t
  static Polynomial Affine(Scalar a, Scalar b);

  const std::vector<Scalar>& coefficients() const { return coefficients_; }
  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coefficients_.size()) - 1; }
  bool IsConstant() const { return degree() <= 0; }
  Scalar Evaluate(const Scalar& t) const;

  Polynomial& operator+=(const Polynomial& o);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) {
    return a += b;
  }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);

 private:
  void Trim();

  std::vector<Scalar> coefficients_;
};

// Oriented, normalized volume of the simplex spanned by h(v, t) over the
// vertices v of one triangulation cell, for a 1-player game whose single
// simplex is subdivided by `tri`. Oriented so that t = 0 gives +1/m^d.
// Throws kNotSinglePlayer for games with more than one player.
Scalar MovedCellVolume(const Game& game, const Triangulation& tri, int cell,
                       const Scalar& t);

// The same volume as an exact polynomial in t of degree <= d, expanded from
// the edge vectors of the moving simplex.
Polynomial MovedCellPolynomial(const Game& game, const Triangulation& tri,
                               int cell);

struct VolumePolynomial {
  Triangulation triangulation;
  std::vector<Polynomial> per_cell;
  Polynomial total;
  // All coefficients of degree >= 1 are exactly zero.
  bool constant = false;
  // Cells whose moved volume at t = 1 is nonzero, ascending.
  std::vector<int> nonzero_at_one;
};

VolumePolynomial TotalVolumePolynomial(const Game& game, int resolution);

// Evaluates the coefficient form at dim + 2 sample points and compares with
// the sum of MovedCellVolume at those points.
bool SampleCheck(const Game& game, const VolumePolynomial& volume);

}  // namespace nashcell

#endif  // NASHCELL_VOLUME_H_
