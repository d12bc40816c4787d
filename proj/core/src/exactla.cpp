#include "hlift/exactla.hpp"

#include <sstream>
#include <stdexcept>

namespace hlift {

Matrix::Matrix(size_t rows, size_t cols, const FieldSpec& spec)
    : rows_(rows), cols_(cols), spec_(spec), a_(rows * cols, Scalar::zero(spec)) {}

Matrix Matrix::identity(size_t n, const FieldSpec& spec) {
  Matrix m(n, n, spec);
  for (size_t i = 0; i < n; ++i) m.at(i, i) = Scalar::one(spec);
  return m;
}

Scalar& Matrix::at(size_t r, size_t c) {
  if (r >= rows_ || c >= cols_) throw std::out_of_range("matrix index");
  return a_[r * cols_ + c];
}

const Scalar& Matrix::at(size_t r, size_t c) const {
  if (r >= rows_ || c >= cols_) throw std::out_of_range("matrix index");
  return a_[r * cols_ + c];
}

static void check_same_shape(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("matrix dimension mismatch");
  if (a.spec() != b.spec()) throw std::invalid_argument("FieldSpec mismatch");
}

Matrix Matrix::operator+(const Matrix& o) const {
  check_same_shape(*this, o);
  Matrix r(rows_, cols_, spec_);
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] + o.a_[i];
  return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
  check_same_shape(*this, o);
  Matrix r(rows_, cols_, spec_);
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] - o.a_[i];
  return r;
}

Matrix Matrix::operator-() const {
  Matrix r(rows_, cols_, spec_);
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = -a_[i];
  return r;
}

Matrix Matrix::scaled(const Scalar& s) const {
  Matrix r(rows_, cols_, spec_);
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] * s;
  return r;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("matrix dimension mismatch");
  if (spec_ != o.spec_) throw std::invalid_argument("FieldSpec mismatch");
  Matrix r(rows_, o.cols_, spec_);
  for (size_t i = 0; i < rows_; ++i) {
    for (size_t k = 0; k < cols_; ++k) {
      const Scalar& v = a_[i * cols_ + k];
      if (v.is_zero()) continue;
      for (size_t j = 0; j < o.cols_; ++j) {
        const Scalar& w = o.a_[k * o.cols_ + j];
        if (w.is_zero()) continue;
        r.a_[i * o.cols_ + j] += v * w;
      }
    }
  }
  return r;
}

Matrix Matrix::transpose() const {
  Matrix r(cols_, rows_, spec_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

Matrix Matrix::kron(const Matrix& o) const {
  if (spec_ != o.spec_) throw std::invalid_argument("FieldSpec mismatch");
  Matrix r(rows_ * o.rows_, cols_ * o.cols_, spec_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = 0; j < cols_; ++j) {
      const Scalar& v = at(i, j);
      if (v.is_zero()) continue;
      for (size_t k = 0; k < o.rows_; ++k)
        for (size_t l = 0; l < o.cols_; ++l) {
          const Scalar& w = o.at(k, l);
          if (w.is_zero()) continue;
          r.at(i * o.rows_ + k, j * o.cols_ + l) = v * w;
        }
    }
  return r;
}

bool Matrix::operator==(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_ || spec_ != o.spec_) return false;
  return a_ == o.a_;
}

bool Matrix::is_zero() const {
  for (const auto& s : a_)
    if (!s.is_zero()) return false;
  return true;
}

Matrix Matrix::block(size_t r0, size_t c0, size_t nr, size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_) throw std::out_of_range("block range");
  Matrix b(nr, nc, spec_);
  for (size_t i = 0; i < nr; ++i)
    for (size_t j = 0; j < nc; ++j) b.at(i, j) = at(r0 + i, c0 + j);
  return b;
}

void Matrix::set_block(size_t r0, size_t c0, const Matrix& b) {
  if (r0 + b.rows() > rows_ || c0 + b.cols() > cols_) throw std::out_of_range("block range");
  for (size_t i = 0; i < b.rows(); ++i)
    for (size_t j = 0; j < b.cols(); ++j) at(r0 + i, c0 + j) = b.at(i, j);
}

Matrix Matrix::hstack(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("hstack row mismatch");
  Matrix r(a.rows(), a.cols() + b.cols(), a.spec());
  r.set_block(0, 0, a);
  r.set_block(0, a.cols(), b);
  return r;
}

Matrix Matrix::vstack(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.cols()) throw std::invalid_argument("vstack col mismatch");
  Matrix r(a.rows() + b.rows(), a.cols(), a.spec());
  r.set_block(0, 0, a);
  r.set_block(a.rows(), 0, b);
  return r;
}

Matrix Matrix::vec() const {
  Matrix v(rows_ * cols_, 1, spec_);
  for (size_t i = 0; i < a_.size(); ++i) v.a_[i] = a_[i];
  return v;
}

Matrix Matrix::unvec(const Matrix& v, size_t rows, size_t cols) {
  if (v.cols() != 1 || v.rows() != rows * cols) throw std::invalid_argument("unvec shape");
  Matrix m(rows, cols, v.spec());
  for (size_t i = 0; i < rows * cols; ++i) m.a_[i] = v.a_[i];
  return m;
}

std::string Matrix::str() const {
  std::ostringstream os;
  for (size_t i = 0; i < rows_; ++i) {
    os << "[";
    for (size_t j = 0; j < cols_; ++j) {
      if (j) os << ", ";
      os << at(i, j).str();
    }
    os << "]\n";
  }
  return os.str();
}

Matrix unit_vector(size_t i, size_t dim, const FieldSpec& spec) {
  Matrix v(dim, 1, spec);
  v.at(i, 0) = Scalar::one(spec);
  return v;
}

namespace {

// Divides a row by its rational content (gcd of numerators over lcm of
// denominators of all polynomial coefficients) to keep entries small
// during elimination. No-op over prime fields. Returns the factor used.
mpq_class row_content(const Matrix& m, size_t row) {
  if (m.spec().kind() != FieldKind::cyclotomic) return 1;
  mpz_class num(0), den(1);
  for (size_t j = 0; j < m.cols(); ++j)
    for (const auto& c : m.at(row, j).coefficients()) {
      if (c == 0) continue;
      mpz_class n = abs(c.get_num());
      num = num == 0 ? n : gcd(num, n);
      den = lcm(den, c.get_den());
    }
  if (num == 0) return 1;
  mpq_class g(num, den);
  g.canonicalize();
  return g;
}

struct Eliminator {
  Matrix r;
  Matrix* t;  // optional transform accumulator
  std::vector<size_t> pivots;

  Eliminator(const Matrix& m, Matrix* transform) : r(m), t(transform) {}

  void scale_row(size_t i, const Scalar& f) {
    for (size_t j = 0; j < r.cols(); ++j) r.at(i, j) = r.at(i, j) * f;
    if (t)
      for (size_t j = 0; j < t->cols(); ++j) t->at(i, j) = t->at(i, j) * f;
  }

  void add_row(size_t dst, size_t src, const Scalar& f) {
    for (size_t j = 0; j < r.cols(); ++j) {
      const Scalar& v = r.at(src, j);
      if (!v.is_zero()) r.at(dst, j) += v * f;
    }
    if (t)
      for (size_t j = 0; j < t->cols(); ++j) {
        const Scalar& v = t->at(src, j);
        if (!v.is_zero()) t->at(dst, j) += v * f;
      }
  }

  void swap_rows(size_t i, size_t k) {
    if (i == k) return;
    for (size_t j = 0; j < r.cols(); ++j) std::swap(r.at(i, j), r.at(k, j));
    if (t)
      for (size_t j = 0; j < t->cols(); ++j) std::swap(t->at(i, j), t->at(k, j));
  }

  void normalize_content(size_t i) {
    mpq_class g = row_content(r, i);
    if (g != 1) scale_row(i, Scalar::from_rational(r.spec(), mpq_class(1) / g));
  }

  void run() {
    size_t prow = 0;
    for (size_t col = 0; col < r.cols() && prow < r.rows(); ++col) {
      size_t sel = prow;
      while (sel < r.rows() && r.at(sel, col).is_zero()) ++sel;
      if (sel == r.rows()) continue;
      swap_rows(prow, sel);
      scale_row(prow, r.at(prow, col).inverse());
      for (size_t i = 0; i < r.rows(); ++i) {
        if (i == prow || r.at(i, col).is_zero()) continue;
        add_row(i, prow, -r.at(i, col));
        normalize_content(i);
      }
      pivots.push_back(col);
      ++prow;
    }
    // Re-normalize pivot rows to pivot 1 (content steps do not touch
    // finished rows, but keep this canonical regardless).
    for (size_t k = 0; k < pivots.size(); ++k)
      if (!r.at(k, pivots[k]).is_one()) scale_row(k, r.at(k, pivots[k]).inverse());
  }
};

}  // namespace

Rref rref(const Matrix& m) {
  Eliminator e(m, nullptr);
  e.run();
  return {std::move(e.r), std::move(e.pivots)};
}

RrefWithTransform rref_with_transform(const Matrix& m) {
  Matrix t = Matrix::identity(m.rows(), m.spec());
  Eliminator e(m, &t);
  e.run();
  return {std::move(e.r), std::move(t), std::move(e.pivots)};
}

size_t rank(const Matrix& m) { return rref(m).pivots.size(); }

std::optional<Matrix> solve(const Matrix& m, const Matrix& b) {
  if (m.rows() != b.rows()) throw std::invalid_argument("solve dimension mismatch");
  if (m.spec() != b.spec()) throw std::invalid_argument("FieldSpec mismatch");
  Rref e = rref(Matrix::hstack(m, b));
  // Inconsistent iff some pivot falls in the appended columns.
  for (size_t p : e.pivots)
    if (p >= m.cols()) return std::nullopt;
  Matrix x(m.cols(), b.cols(), m.spec());
  for (size_t k = 0; k < e.pivots.size(); ++k)
    for (size_t j = 0; j < b.cols(); ++j) x.at(e.pivots[k], j) = e.r.at(k, m.cols() + j);
  if (m * x != b) throw std::logic_error("solve: substitution check failed");
  return x;
}

Subspace::Subspace(size_t ambient, const FieldSpec& spec)
    : ambient_(ambient), basis_(0, ambient, spec) {}

Subspace Subspace::row_space(const Matrix& vectors) {
  Rref e = rref(vectors);
  Subspace s(vectors.cols(), vectors.spec());
  s.basis_ = e.r.block(0, 0, e.pivots.size(), vectors.cols());
  return s;
}

bool Subspace::contains(const Matrix& v) const { return coordinates(v).has_value(); }

std::optional<Matrix> Subspace::coordinates(const Matrix& v) const {
  if (v.rows() != ambient_ || v.cols() != 1)
    throw std::invalid_argument("subspace membership expects an ambient column vector");
  Matrix coords(dim(), 1, basis_.spec());
  Matrix rem = v.transpose();  // 1 x ambient
  for (size_t k = 0; k < dim(); ++k) {
    // Basis is in rref: the leading entry of row k is 1 and isolates its
    // coefficient.
    size_t piv = 0;
    while (piv < ambient_ && basis_.at(k, piv).is_zero()) ++piv;
    if (piv == ambient_) continue;
    const Scalar c = rem.at(0, piv);
    if (c.is_zero()) continue;
    coords.at(k, 0) = c;
    for (size_t j = 0; j < ambient_; ++j) rem.at(0, j) -= c * basis_.at(k, j);
  }
  if (!rem.is_zero()) return std::nullopt;
  return coords;
}

Subspace kernel(const Matrix& m) {
  Rref e = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (size_t p : e.pivots) is_pivot[p] = true;
  size_t nullity = m.cols() - e.pivots.size();
  Matrix basis(nullity, m.cols(), m.spec());
  size_t row = 0;
  for (size_t c = 0; c < m.cols(); ++c) {
    if (is_pivot[c]) continue;
    basis.at(row, c) = Scalar::one(m.spec());
    for (size_t k = 0; k < e.pivots.size(); ++k)
      basis.at(row, e.pivots[k]) = -e.r.at(k, c);
    ++row;
  }
  return Subspace::row_space(basis);
}

Subspace image(const Matrix& m) { return Subspace::row_space(m.transpose()); }

}  // namespace hlift
