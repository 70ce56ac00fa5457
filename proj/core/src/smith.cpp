// Smith normal form engine.
//
// The elimination is written once over an arithmetic policy and instantiated
// twice: checked int64 (fast, throws Overflow) and GMP integers. Every
// decision (pivot choice, quotients, gcd cofactors) is made by the same code
// on the same values, so both instantiations return identical transforms
// whenever the int64 run completes.

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <utility>

#include "coinv/zlinalg.hpp"

namespace coinv {
namespace {

struct Overflow {};

template <class T>
struct Arith;

template <>
struct Arith<std::int64_t> {
  using T = std::int64_t;
  static bool is_zero(T a) { return a == 0; }
  static T abs(T a) {
    if (a == std::numeric_limits<T>::min()) throw Overflow{};
    return a < 0 ? -a : a;
  }
  static bool less_abs(T a, T b) { return abs(a) < abs(b); }
  static bool negative(T a) { return a < 0; }
  static T quot(T a, T b) {
    if (a == std::numeric_limits<T>::min() && b == -1) throw Overflow{};
    return a / b;
  }
  static T rem(T a, T b) { return b == -1 ? 0 : a % b; }
  static void submul(T& a, T q, T b) {
    T p;
    if (__builtin_mul_overflow(q, b, &p) || __builtin_sub_overflow(a, p, &a)) throw Overflow{};
  }
  static void addmul(T& a, T q, T b) {
    T p;
    if (__builtin_mul_overflow(q, b, &p) || __builtin_add_overflow(a, p, &a)) throw Overflow{};
  }
  static T mul(T a, T b) {
    T p;
    if (__builtin_mul_overflow(a, b, &p)) throw Overflow{};
    return p;
  }
  static T add(T a, T b) {
    T p;
    if (__builtin_add_overflow(a, b, &p)) throw Overflow{};
    return p;
  }
  static void neg(T& a) {
    if (a == std::numeric_limits<T>::min()) throw Overflow{};
    a = -a;
  }
  static T from(const Integer& v) {
    if (!v.fits_slong_p()) throw Overflow{};
    return v.get_si();
  }
  static Integer to(T v) { return Integer(static_cast<long>(v)); }
};

template <>
struct Arith<Integer> {
  using T = Integer;
  static bool is_zero(const T& a) { return sgn(a) == 0; }
  static T abs(const T& a) { return ::abs(a); }
  static bool less_abs(const T& a, const T& b) { return mpz_cmpabs(a.get_mpz_t(), b.get_mpz_t()) < 0; }
  static bool negative(const T& a) { return sgn(a) < 0; }
  static T quot(const T& a, const T& b) {
    T q;
    mpz_tdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
  }
  static T rem(const T& a, const T& b) {
    T r;
    mpz_tdiv_r(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
  }
  static void submul(T& a, const T& q, const T& b) { mpz_submul(a.get_mpz_t(), q.get_mpz_t(), b.get_mpz_t()); }
  static void addmul(T& a, const T& q, const T& b) { mpz_addmul(a.get_mpz_t(), q.get_mpz_t(), b.get_mpz_t()); }
  static T mul(const T& a, const T& b) { return a * b; }
  static T add(const T& a, const T& b) { return a + b; }
  static void neg(T& a) { mpz_neg(a.get_mpz_t(), a.get_mpz_t()); }
  static T from(const Integer& v) { return v; }
  static Integer to(const T& v) { return v; }
};

template <class T>
struct Dense {
  std::size_t rows = 0, cols = 0;
  std::vector<T> data;
  Dense() = default;
  Dense(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, T(0)) {}
  T& at(std::size_t r, std::size_t c) { return data[r * cols + c]; }
  const T& at(std::size_t r, std::size_t c) const { return data[r * cols + c]; }
  T* row(std::size_t r) { return data.data() + r * cols; }
  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < cols; ++c) std::swap(at(a, c), at(b, c));
  }
  static Dense identity(std::size_t n) {
    Dense d(n, n);
    for (std::size_t i = 0; i < n; ++i) d.at(i, i) = T(1);
    return d;
  }
};

// Extended Euclid on nonnegative inputs: returns g with x a + y b = g.
template <class T>
T ext_gcd(const T& a, const T& b, T& x, T& y) {
  using A = Arith<T>;
  T r0 = a, r1 = b, s0 = T(1), s1 = T(0), t0 = T(0), t1 = T(1);
  while (!A::is_zero(r1)) {
    T q = A::quot(r0, r1);
    T r2 = r0;
    A::submul(r2, q, r1);
    T s2 = s0;
    A::submul(s2, q, s1);
    T t2 = t0;
    A::submul(t2, q, t1);
    r0 = std::move(r1);
    r1 = std::move(r2);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  x = s0;
  y = t0;
  return r0;
}

template <class T>
class Engine {
  using A = Arith<T>;

 public:
  Engine(const IntMatrix& input, const SNFOptions& opt) : opt_(opt), a_(input.rows(), input.cols()) {
    for (std::size_t r = 0; r < input.rows(); ++r)
      for (std::size_t c = 0; c < input.cols(); ++c) a_.at(r, c) = A::from(input(r, c));
    if (opt_.want_u) u_ = Dense<T>::identity(a_.rows);
    // V is kept transposed so that column operations become row operations.
    if (opt_.want_v) vt_ = Dense<T>::identity(a_.cols);
    if (opt_.want_v_inverse) vi_ = Dense<T>::identity(a_.cols);
  }

  SNFDecomposition run() {
    const std::size_t m = a_.rows, n = a_.cols;
    std::size_t t = 0;
    for (; t < std::min(m, n); ++t) {
      if (!move_min_pivot(t)) break;
      for (;;) {
        bool clear = eliminate_column(t);
        clear = eliminate_row(t) && clear;
        if (clear) break;
        move_min_pivot(t);
      }
      if (A::negative(a_.at(t, t))) negate_row(t);
    }
    const std::size_t rank = t;
    enforce_divisibility(rank);

    SNFDecomposition out;
    out.diagonal.reserve(rank);
    for (std::size_t i = 0; i < rank; ++i) out.diagonal.push_back(A::to(a_.at(i, i)));
    if (opt_.want_u) out.U = to_int(u_, false);
    if (opt_.want_v) out.V = to_int(vt_, true);
    if (opt_.want_v_inverse) out.V_inverse = to_int(vi_, false);
    return out;
  }

 private:
  // Moves the minimal nonzero |entry| of the active block to (t, t); ties go
  // to the lowest (row, col). Returns false when the block is zero.
  bool move_min_pivot(std::size_t t) {
    std::size_t pr = 0, pc = 0;
    bool found = false;
    for (std::size_t r = t; r < a_.rows; ++r) {
      const T* row = a_.row(r);
      for (std::size_t c = t; c < a_.cols; ++c) {
        if (A::is_zero(row[c])) continue;
        if (!found || A::less_abs(row[c], a_.at(pr, pc))) {
          pr = r;
          pc = c;
          found = true;
        }
      }
    }
    if (!found) return false;
    if (pr != t) {
      a_.swap_rows(pr, t);
      if (opt_.want_u) u_.swap_rows(pr, t);
    }
    if (pc != t) {
      for (std::size_t r = 0; r < a_.rows; ++r) std::swap(a_.at(r, pc), a_.at(r, t));
      if (opt_.want_v) vt_.swap_rows(pc, t);
      if (opt_.want_v_inverse) vi_.swap_rows(pc, t);
    }
    return true;
  }

  // row_dst -= q * row_src over the listed support
  static void row_submul(Dense<T>& d, std::size_t dst, std::size_t src, const T& q,
                         const std::vector<std::size_t>& support) {
    T* rd = d.row(dst);
    const T* rs = d.row(src);
    for (std::size_t c : support) A::submul(rd[c], q, rs[c]);
  }

  static std::vector<std::size_t> support_of(Dense<T>& d, std::size_t r, std::size_t from = 0) {
    std::vector<std::size_t> s;
    const T* row = d.row(r);
    for (std::size_t c = from; c < d.cols; ++c)
      if (!A::is_zero(row[c])) s.push_back(c);
    return s;
  }

  bool eliminate_column(std::size_t t) {
    bool clear = true;
    std::vector<std::size_t> supp_a = support_of(a_, t, t);
    std::vector<std::size_t> supp_u;
    if (opt_.want_u) supp_u = support_of(u_, t);
    const T pivot = a_.at(t, t);
    for (std::size_t i = t + 1; i < a_.rows; ++i) {
      if (A::is_zero(a_.at(i, t))) continue;
      T q = A::quot(a_.at(i, t), pivot);
      if (!A::is_zero(q)) {
        row_submul(a_, i, t, q, supp_a);
        if (opt_.want_u) row_submul(u_, i, t, q, supp_u);
      }
      if (!A::is_zero(a_.at(i, t))) clear = false;
    }
    return clear;
  }

  bool eliminate_row(std::size_t t) {
    bool clear = true;
    std::vector<std::size_t> col_support;
    for (std::size_t r = t; r < a_.rows; ++r)
      if (!A::is_zero(a_.at(r, t))) col_support.push_back(r);
    std::vector<std::size_t> supp_v;
    if (opt_.want_v) supp_v = support_of(vt_, t);
    const T pivot = a_.at(t, t);
    for (std::size_t j = t + 1; j < a_.cols; ++j) {
      if (A::is_zero(a_.at(t, j))) continue;
      T q = A::quot(a_.at(t, j), pivot);
      if (!A::is_zero(q)) {
        for (std::size_t r : col_support) A::submul(a_.at(r, j), q, a_.at(r, t));
        if (opt_.want_v) row_submul(vt_, j, t, q, supp_v);
        if (opt_.want_v_inverse) {
          // V <- V E with E = I - q e_t e_j^T, so V^{-1} <- (I + q e_t e_j^T) V^{-1}.
          T* rt = vi_.row(t);
          const T* rj = vi_.row(j);
          for (std::size_t c = 0; c < vi_.cols; ++c)
            if (!A::is_zero(rj[c])) A::addmul(rt[c], q, rj[c]);
        }
      }
      if (!A::is_zero(a_.at(t, j))) clear = false;
    }
    return clear;
  }

  void negate_row(std::size_t t) {
    for (std::size_t c = 0; c < a_.cols; ++c) A::neg(a_.at(t, c));
    if (opt_.want_u)
      for (std::size_t c = 0; c < u_.cols; ++c) A::neg(u_.at(t, c));
  }

  // Replaces rows (i, j) of d by (p*ri + q*rj, r*ri + s*rj).
  static void mix_rows(Dense<T>& d, std::size_t i, std::size_t j, const T& p, const T& q, const T& r,
                       const T& s) {
    T* ri = d.row(i);
    T* rj = d.row(j);
    for (std::size_t c = 0; c < d.cols; ++c) {
      T new_i = A::add(A::mul(p, ri[c]), A::mul(q, rj[c]));
      T new_j = A::add(A::mul(r, ri[c]), A::mul(s, rj[c]));
      ri[c] = std::move(new_i);
      rj[c] = std::move(new_j);
    }
  }

  void enforce_divisibility(std::size_t rank) {
    for (std::size_t i = 0; i < rank; ++i) {
      for (std::size_t j = i + 1; j < rank; ++j) {
        const T a = a_.at(i, i);
        const T b = a_.at(j, j);
        if (A::is_zero(A::rem(b, a))) continue;
        T x, y;
        T g = ext_gcd(a, b, x, y);
        T ag = A::quot(a, g);
        T bg = A::quot(b, g);
        T neg_bg = bg;
        A::neg(neg_bg);
        T neg_y_bg = A::mul(y, bg);
        A::neg(neg_y_bg);
        T x_ag = A::mul(x, ag);
        // [[x, y], [-b/g, a/g]] diag(a, b) [[1, -y b/g], [1, x a/g]] = diag(g, a b / g)
        if (opt_.want_u) mix_rows(u_, i, j, x, y, neg_bg, ag);
        if (opt_.want_v) mix_rows(vt_, i, j, T(1), T(1), neg_y_bg, x_ag);
        if (opt_.want_v_inverse) {
          T y_bg = A::mul(y, bg);
          mix_rows(vi_, i, j, x_ag, y_bg, T(-1), T(1));
        }
        a_.at(i, i) = g;
        a_.at(j, j) = A::mul(a, bg);
      }
    }
  }

  static IntMatrix to_int(const Dense<T>& d, bool transpose) {
    IntMatrix m(transpose ? d.cols : d.rows, transpose ? d.rows : d.cols);
    for (std::size_t r = 0; r < d.rows; ++r)
      for (std::size_t c = 0; c < d.cols; ++c) {
        if (A::is_zero(d.at(r, c))) continue;
        if (transpose)
          m(c, r) = A::to(d.at(r, c));
        else
          m(r, c) = A::to(d.at(r, c));
      }
    return m;
  }

  SNFOptions opt_;
  Dense<T> a_, u_, vt_, vi_;
};

}  // namespace

SNFDecomposition smith_decompose(const IntMatrix& a, const SNFOptions& options) {
  try {
    return Engine<std::int64_t>(a, options).run();
  } catch (const Overflow&) {
    return Engine<Integer>(a, options).run();
  }
}

SNFResult smith_normal_form(const IntMatrix& a) {
  SNFDecomposition d = smith_decompose(a, SNFOptions{true, true, false});
  SNFResult out;
  out.U = std::move(*d.U);
  out.V = std::move(*d.V);
  out.S = IntMatrix(a.rows(), a.cols());
  for (std::size_t i = 0; i < d.diagonal.size(); ++i) out.S(i, i) = d.diagonal[i];
  return out;
}

std::vector<Integer> SNFResult::diagonal() const {
  std::vector<Integer> out;
  for (std::size_t i = 0; i < std::min(S.rows(), S.cols()); ++i) out.push_back(S(i, i));
  return out;
}

std::size_t SNFResult::rank() const {
  std::size_t r = 0;
  for (std::size_t i = 0; i < std::min(S.rows(), S.cols()); ++i)
    if (S(i, i) != 0) ++r;
  return r;
}

}  // namespace coinv
