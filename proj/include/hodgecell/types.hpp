#ifndef HODGECELL_TYPES_HPP
#define HODGECELL_TYPES_HPP

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace hodgecell {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RMatrix = Eigen::MatrixXd;

// Base class for everything this library throws on bad input or data
// that fails a structural test. Numerical checks that merely *report*
// (Riemann relations, path checkers) return reports instead of throwing.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DimensionMismatch : Error {
  using Error::Error;
};
struct SingularForm : Error {
  using Error::Error;
};
struct ParityViolation : Error {
  using Error::Error;
};
struct InvalidFrame : Error {
  using Error::Error;
};
struct InvalidFiltration : Error {
  using Error::Error;
};
struct NotAHodgeStructure : Error {
  using Error::Error;
};
struct DegenerateDecomposition : Error {
  using Error::Error;
};
struct SingularBase : Error {
  using Error::Error;
};
struct LevelOutOfRange : Error {
  using Error::Error;
};
struct IndexOutOfRange : Error {
  using Error::Error;
};
struct FrameMismatch : Error {
  using Error::Error;
};
struct UnsupportedFrame : Error {
  using Error::Error;
};
struct BaseMismatch : Error {
  using Error::Error;
};
struct StepTooLarge : Error {
  using Error::Error;
};
struct ParseError : Error {
  using Error::Error;
};

// Thrown when a filtration (or transition matrix) lies outside the
// unipotent cell: some leading principal block submatrix is singular.
// `level` is the largest k whose f^k x f^k leading minor fails.
struct NotInCell : Error {
  int level;
  explicit NotInCell(int k)
      : Error("not in the unipotent cell: leading minor singular at level " +
              std::to_string(k)),
        level(k) {}
};

}  // namespace hodgecell

#endif
