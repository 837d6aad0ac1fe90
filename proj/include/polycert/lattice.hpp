#ifndef POLYCERT_LATTICE_HPP
#define POLYCERT_LATTICE_HPP

// Exact integer and rational linear algebra: primitive vectors, Bareiss
// determinants, Smith normal form with transforms, saturation, basis
// completion, quotient-lattice projections and rational solves.
// No floating point anywhere in this module.

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace polycert {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;
using IntVector = std::vector<Int>;

struct lattice_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

class IntMatrix {
public:
    IntMatrix() : rows_(0), cols_(0) {}
    IntMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows, IntVector(cols, 0)) {}
    explicit IntMatrix(std::vector<IntVector> rows);

    static IntMatrix identity(std::size_t n);
    static IntMatrix from_columns(const std::vector<IntVector>& cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Int& at(std::size_t r, std::size_t c) { return data_[r][c]; }
    const Int& at(std::size_t r, std::size_t c) const { return data_[r][c]; }
    const IntVector& row(std::size_t r) const { return data_[r]; }
    IntVector column(std::size_t c) const;

    IntMatrix operator*(const IntMatrix& other) const;
    bool operator==(const IntMatrix& other) const = default;

    void swap_rows(std::size_t i, std::size_t j);
    void swap_cols(std::size_t i, std::size_t j);
    // row i += f * row j / col i += f * col j
    void add_row(std::size_t i, std::size_t j, const Int& f);
    void add_col(std::size_t i, std::size_t j, const Int& f);
    void negate_row(std::size_t i);
    void negate_col(std::size_t i);

    std::string str() const;

private:
    std::size_t rows_, cols_;
    std::vector<IntVector> data_;
};

struct SnfResult {
    // u * a * v == diagonal(invariant_factors), u and v unimodular.
    std::vector<Int> invariant_factors;
    IntMatrix u;
    IntMatrix v;
    IntMatrix v_inv;
    std::size_t rank() const;
};

Int gcd_all(const IntVector& v);

// v / gcd(entries); direction preserved, never multiplied by -1.
IntVector primitive(const IntVector& v);

bool is_zero(const IntVector& v);

// Exact determinant by fraction-free (Bareiss) elimination.
Int det_exact(const IntMatrix& m);

SnfResult smith_normal_form(const IntMatrix& m);

// Basis of (rational span of vs) \cap Z^n. Input must be linearly
// independent over Q.
std::vector<IntVector> saturation_basis(const std::vector<IntVector>& vs);

// Extends a basis of a saturated rank-k sublattice of Z^n to a Z-basis of
// Z^n; returns the n-k new vectors. Deterministic given input order.
std::vector<IntVector> complement_basis(const std::vector<IntVector>& sat);

// Throws unless sat ++ comp is a Z-basis of Z^n.
void verify_basis(const std::vector<IntVector>& sat,
                  const std::vector<IntVector>& comp);

// Coordinates of v along comp in the basis sat ++ comp (the image of v in
// the quotient lattice Z^n / <sat>).
IntVector project_coordinates(const IntVector& v,
                              const std::vector<IntVector>& sat,
                              const std::vector<IntVector>& comp);

// Unique rational x with columns * x = b if b lies in the column span,
// nullopt otherwise. Columns must be independent.
std::optional<std::vector<Rat>> solve_rational(
    const std::vector<IntVector>& columns, const IntVector& b);

}  // namespace polycert

#endif
