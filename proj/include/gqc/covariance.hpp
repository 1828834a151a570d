#pragma once

namespace gqc {

// Two-mode Gaussian states in standard form, quadratures ordered
// (X_A, P_A, X_B, P_B):
//
//     C = [ n*I2          diag(c1, c2) ]
//         [ diag(c1, c2)  m*I2         ]
//
// Variances are vacuum normalized: the vacuum has n = m = 1 and a physical
// state has both symplectic eigenvalues >= 1.  Every quantity in this library
// assumes that normalization.

// Parameters of a two-mode squeezed thermal state: thermal inputs with mean
// occupations na, nb passed through a two-mode squeezer of strength r.
struct StsParams {
  double r;
  double na;
  double nb;
};

struct CovarianceMatrix {
  double n;   // variance of mode A
  double m;   // variance of mode B
  double c1;  // <X_A X_B>
  double c2;  // <P_A P_B>

  // True when (c1, c2) form a (c, -c) pair within 1e-12 relative slack.
  bool is_sts_form() const;

  // Common cross correlation for matrices in (c, -c) form.  FormError otherwise.
  double c() const;
};

struct SymplecticSpectrum {
  double i1, i2, i3, i4;  // invariants n^2, m^2, c1*c2, det C
  double delta;           // i1 + i2 + 2*i3
  double d_plus;          // larger symplectic eigenvalue
  double d_minus;         // smaller symplectic eigenvalue; >= 1 iff physical
  double d_minus_pt;      // smaller eigenvalue after partial transposition
};

// Covariance matrix of the squeezed thermal family.  DomainError for negative
// or non-finite parameters.
CovarianceMatrix sts_covariance(const StsParams& params);

// Symplectic eigenvalues from the quartic invariants (no eigensolver).
// NumericError if delta^2 - 4*i4 < -1e-9; smaller negatives and negative
// radicands from rounding are clamped to zero.  For (c, -c)-form matrices the
// discriminant is evaluated in the exactly factored form
// (n - m)^2 * ((n + m)^2 - 4 c^2), which keeps degenerate spectra (pure
// states) accurate to a few ulp instead of sqrt(eps).
SymplecticSpectrum symplectic_spectrum(const CovarianceMatrix& cm);

// Positive definite and d_minus >= 1 - 1e-12.  Never throws.
bool is_physical(const CovarianceMatrix& cm);

}  // namespace gqc
