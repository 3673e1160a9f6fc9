#include "qskein/quotient_engine.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <functional>
#include <set>
#include <thread>

namespace qskein {

std::string to_string(Variant v) { return v == Variant::MuTop ? "paper-mu-top" : "mvdv"; }

Variant parse_variant(const std::string& s) {
  if (s == "paper-mu-top") return Variant::MuTop;
  if (s == "mvdv") return Variant::Mvdv;
  throw std::invalid_argument("unknown variant '" + s + "' (expected paper-mu-top or mvdv)");
}

namespace {

// runs f(i) for i in [0, count) on a small pool; results land by index so
// the output order does not depend on scheduling
template <class T>
std::vector<T> parallel_map(std::size_t count, unsigned threads, const std::function<T(std::size_t)>& f) {
  std::vector<T> out(count);
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, count));
  if (threads <= 1) {
    for (std::size_t i = 0; i < count; ++i) out[i] = f(i);
    return out;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr err;
  std::mutex err_mu;
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t)
    pool.emplace_back([&] {
      for (;;) {
        std::size_t i = next.fetch_add(1);
        if (i >= count) return;
        try {
          out[i] = f(i);
        } catch (...) {
          std::lock_guard<std::mutex> lk(err_mu);
          if (!err) err = std::current_exception();
          next = count;
        }
      }
    });
  for (auto& th : pool) th.join();
  if (err) std::rethrow_exception(err);
  return out;
}

// all tuples of normal words with total length exactly d
void tuples_of_degree(const RewriteSystem& R, int n, int d, std::vector<TKey>& out) {
  TKey cur;
  std::function<void(int, int)> rec = [&](int slot, int left) {
    if (slot == n - 1) {
      for (const auto& w : R.graded_basis(left)) {
        cur.push_back(w);
        out.push_back(cur);
        cur.pop_back();
      }
      return;
    }
    for (int k = 0; k <= left; ++k)
      for (const auto& w : R.graded_basis(k)) {
        cur.push_back(w);
        rec(slot + 1, left - k);
        cur.pop_back();
      }
  };
  rec(0, d);
}

std::vector<Tensor> monomials_up_to(const RewriteSystem& R, int n, int D) {
  std::vector<Tensor> out;
  for (int d = 0; d <= D; ++d) {
    std::vector<TKey> ks;
    tuples_of_degree(R, n, d, ks);
    std::sort(ks.begin(), ks.end());
    for (auto& k : ks) out.push_back(Tensor::pure(k));
  }
  return out;
}

int key_degree(const TKey& k) {
  int s = 0;
  for (const auto& w : k) s += static_cast<int>(w.size());
  return s;
}

}  // namespace

// --- MonomialBasis ---

MonomialBasis::MonomialBasis(const RewriteSystem& R, int arity, int max_degree) : n_(arity), maxdeg_(max_degree) {
  if (arity < 1) throw std::invalid_argument("arity must be >= 1");
  for (int d = 0; d <= max_degree; ++d) {
    std::vector<TKey> ks;
    tuples_of_degree(R, arity, d, ks);
    std::sort(ks.begin(), ks.end());
    for (auto& k : ks) {
      index_.emplace(k, static_cast<int>(keys_.size()));
      keys_.push_back(std::move(k));
      deg_.push_back(d);
    }
  }
}

int MonomialBasis::index(const TKey& k) const {
  auto it = index_.find(k);
  return it == index_.end() ? -1 : it->second;
}

std::size_t MonomialBasis::count(int d) const {
  return static_cast<std::size_t>(std::count(deg_.begin(), deg_.end(), d));
}

SparseRow MonomialBasis::row(const Tensor& t) const {
  SparseRow r;
  for (const auto& [k, c] : t.terms()) {
    int i = index(k);
    if (i < 0) throw std::out_of_range("tensor term beyond the monomial basis (degree " + std::to_string(key_degree(k)) + ")");
    r[i] = c;
  }
  return r;
}

Tensor MonomialBasis::tensor(const SparseRow& r) const {
  Tensor t(n_);
  for (const auto& [i, c] : r) t.add(key(i), c);
  return t;
}

// --- FilteredQuotient ---

std::vector<TKey> FilteredQuotient::quotient_basis(int d) const {
  std::vector<TKey> out;
  for (std::size_t i = 0; i < basis->size(); ++i) {
    int col = static_cast<int>(i);
    if (basis->degree(col) == d && !echelon.is_pivot(col)) out.push_back(basis->key(col));
  }
  return out;
}

std::map<int, Rational> FilteredQuotient::normal_form(const Tensor& x) const {
  std::map<int, Rational> v;
  for (const auto& [i, c] : basis->row(x)) v[i] = Rational(c);
  // eliminate pivot columns from the top down; a pivot row only touches
  // columns at or below its lead
  auto it = v.end();
  while (it != v.begin()) {
    --it;
    int col = it->first;
    if (!echelon.is_pivot(col) || it->second.is_zero()) continue;
    const SparseRow& p = echelon.rows().at(col);
    Rational f = it->second / Rational(p.rbegin()->second);
    for (const auto& [c, y] : p) v[c] -= f * Rational(y);
    it = v.find(col);
  }
  for (auto e = v.begin(); e != v.end();) e = e->second.is_zero() ? v.erase(e) : std::next(e);
  return v;
}

// --- QuotientEngine ---

QuotientEngine::QuotientEngine(const BqContext& B, EngineOptions opts) : B_(B), opts_(opts) {}

const TensorPower& QuotientEngine::power(int n) const {
  std::lock_guard<std::mutex> lk(mu_);
  auto& p = powers_[n];
  if (!p) p = std::make_unique<TensorPower>(B_, n, opts_.model, opts_.mirror);
  return *p;
}

std::shared_ptr<const MonomialBasis> QuotientEngine::make_basis(int arity, int wd) const {
  // count first so oversized jobs are rejected before allocating
  std::size_t total = 0;
  for (int d = 0; d <= wd; ++d) {
    std::vector<TKey> ks;
    tuples_of_degree(B_.rules(), arity, d, ks);
    total += ks.size();
    if (total > opts_.max_columns)
      throw ResourceError("monomial basis for arity " + std::to_string(arity) + " and working degree " + std::to_string(wd) +
                          " exceeds " + std::to_string(opts_.max_columns) + " columns");
  }
  return std::make_shared<MonomialBasis>(B_.rules(), arity, wd);
}

std::vector<int> QuotientEngine::letter_image_degrees(const BraidWord& beta) const {
  const TensorPower& T = power(beta.strands);
  std::vector<int> out;
  for (int s = 0; s < beta.strands; ++s)
    for (int g = 0; g < 4; ++g)
      out.push_back(static_cast<int>(T.braid_act(beta, T.embed(Poly::word(make_word({g})), s)).degree()));
  return out;
}

namespace {

// degree of beta(x) for a monomial x, from the degrees of the letter images;
// exact because the associated graded algebra has no zero divisors
int image_degree(const TKey& k, const std::vector<int>& letter_deg) {
  int d = 0;
  for (std::size_t s = 0; s < k.size(); ++s)
    for (char g : k[s]) d += letter_deg[4 * s + static_cast<std::size_t>(g)];
  return d;
}

std::vector<Tensor> flatten(std::vector<std::vector<Tensor>>&& parts) {
  std::vector<Tensor> out;
  for (auto& v : parts)
    for (auto& r : v) out.push_back(std::move(r));
  return out;
}

}  // namespace

std::vector<Tensor> QuotientEngine::relation_generators(const BraidWord& beta, int D, int max_degree) const {
  if (D < 0) throw std::invalid_argument("degree must be >= 0");
  const int n = beta.strands;
  const TensorPower& T = power(n);
  auto mons = monomials_up_to(B_.rules(), n, D);
  std::vector<int> letter_deg;
  if (max_degree >= 0) letter_deg = letter_image_degrees(beta);
  auto per_x = parallel_map<std::vector<Tensor>>(mons.size(), opts_.threads, [&](std::size_t i) {
    const Tensor& x = mons[i];
    const TKey& xk = x.terms().begin()->first;
    const int dx = static_cast<int>(x.degree());
    // the first term has degree <= dx + dy, so beta(x) y of degree above
    // max_degree cannot cancel and the relation would be dropped anyway
    const int dbx = max_degree >= 0 ? image_degree(xk, letter_deg) : 0;
    std::vector<Tensor> rel;
    if (max_degree >= 0 && dbx > max_degree) return rel;
    Tensor bx = T.braid_act(beta, x);
    if (max_degree >= 0 && static_cast<int>(bx.degree()) != dbx) throw std::logic_error("braid image degree is not additive");
    for (const auto& y : mons) {
      const int dy = static_cast<int>(y.degree());
      if (dx + dy > D) continue;
      if (max_degree >= 0 && dbx + dy > max_degree) continue;
      Tensor lhs = opts_.variant == Variant::MuTop ? T.twisted_opposite_mul(x, y) : T.mul(x, y);
      Tensor r = lhs - T.mul(bx, y);
      if (r.is_zero()) continue;
      if (max_degree >= 0 && static_cast<int>(r.degree()) > max_degree) continue;
      rel.push_back(std::move(r));
    }
    return rel;
  });
  return flatten(std::move(per_x));
}

std::vector<Tensor> QuotientEngine::mapping_torus_generators(const BraidWord& beta, int D, int max_degree) const {
  if (D < 0) throw std::invalid_argument("degree must be >= 0");
  const int n = beta.strands;
  const TensorPower& T = power(n);
  const TensorPower& T1 = power(n + 1);
  auto xs = monomials_up_to(B_.rules(), n, D);
  auto ys = monomials_up_to(B_.rules(), n + 1, D);
  std::vector<int> letter_deg;
  if (max_degree >= 0) letter_deg = letter_image_degrees(beta);
  auto per_x = parallel_map<std::vector<Tensor>>(xs.size(), opts_.threads, [&](std::size_t i) {
    const Tensor& x = xs[i];
    const TKey& xk = x.terms().begin()->first;
    const int dx = static_cast<int>(x.degree());
    std::vector<Tensor> rel;
    Tensor adx = T.braided_total_coaction(x);
    const int da = static_cast<int>(adx.degree());
    const int db = max_degree >= 0 ? image_degree(xk, letter_deg) : 0;
    // both terms keep their degree (theta and psi are filtered isomorphisms);
    // when the two degrees differ the larger one survives in the relation
    auto hopeless = [&](int dy) { return max_degree >= 0 && da != db && std::max(da, db) + dy > max_degree; };
    bool any = false;
    for (const auto& y : ys)
      if (dx + static_cast<int>(y.degree()) <= D && !hopeless(static_cast<int>(y.degree()))) any = true;
    if (!any) return rel;
    // beta(x) in factors 1..n, unit in factor n+1
    Tensor bx(n + 1);
    Tensor b = T.braid_act(beta, x);
    if (max_degree >= 0 && static_cast<int>(b.degree()) != db) throw std::logic_error("braid image degree is not additive");
    for (const auto& [k, c] : b.terms()) {
      TKey k2 = k;
      k2.emplace_back();
      bx.add(std::move(k2), c);
    }
    for (const auto& y : ys) {
      const int dy = static_cast<int>(y.degree());
      if (dx + dy > D || hopeless(dy)) continue;
      Tensor rhs = opts_.variant == Variant::MuTop ? T1.twisted_opposite_mul(adx, y) : T1.mul(adx, y);
      Tensor r = T1.mul(bx, y) - rhs;
      if (r.is_zero()) continue;
      if (max_degree >= 0 && static_cast<int>(r.degree()) > max_degree) continue;
      rel.push_back(std::move(r));
    }
    return rel;
  });
  return flatten(std::move(per_x));
}

FilteredQuotient QuotientEngine::close(int arity, int D, int wd, std::shared_ptr<const MonomialBasis> basis,
                                       const std::vector<Tensor>& gens) const {
  FilteredQuotient q;
  q.arity = arity;
  q.degree = D;
  q.working_degree = wd;
  q.basis = basis;
  const TensorPower& T = power(arity);

  std::vector<Tensor> frontier;
  for (const auto& g : gens) {
    if (g.is_zero() || static_cast<int>(g.degree()) > wd) continue;
    ++q.generator_count;
    if (q.echelon.insert(basis->row(g))) frontier.push_back(g);
  }
  std::vector<Tensor> ones;
  for (int s = 0; s < arity; ++s)
    for (int g = 0; g < 4; ++g) ones.push_back(T.embed(Poly::word(make_word({g})), s));

  // two-sided closure by degree-one monomials, to a fixpoint
  while (!frontier.empty()) {
    std::vector<Tensor> grow;
    for (auto& f : frontier)
      if (static_cast<int>(f.degree()) < wd) grow.push_back(std::move(f));
    auto products = parallel_map<std::vector<Tensor>>(grow.size(), opts_.threads, [&](std::size_t i) {
      std::vector<Tensor> out;
      for (const auto& m : ones) {
        out.push_back(T.mul(m, grow[i]));
        out.push_back(T.mul(grow[i], m));
      }
      return out;
    });
    std::vector<Tensor> next;
    for (auto& ps : products)
      for (auto& p : ps) {
        if (p.is_zero() || static_cast<int>(p.degree()) > wd) continue;
        if (q.echelon.insert(basis->row(p))) next.push_back(std::move(p));
      }
    frontier = std::move(next);
  }
  return q;
}

void QuotientEngine::finish(FilteredQuotient& q, const FilteredQuotient* prev) const {
  q.graded_dims.assign(static_cast<std::size_t>(q.degree) + 1, 0);
  q.stabilized.assign(static_cast<std::size_t>(q.degree) + 1, false);
  auto pivots_upto = [&](const FilteredQuotient* f, int d) {
    std::set<int> s;
    if (!f) return s;
    for (const auto& [col, row] : f->echelon.rows())
      if (q.basis->degree(col) <= d) s.insert(col);
    return s;
  };
  for (int d = 0; d <= q.degree; ++d) {
    std::size_t piv = 0;
    for (const auto& [col, row] : q.echelon.rows())
      if (q.basis->degree(col) == d) ++piv;
    q.graded_dims[static_cast<std::size_t>(d)] = q.basis->count(d) - piv;
    q.stabilized[static_cast<std::size_t>(d)] = pivots_upto(prev, d) == pivots_upto(&q, d);
  }
}

FilteredQuotient QuotientEngine::link_quotient(const BraidWord& beta, int D, int slack) const {
  return quotient(beta.strands, D, slack, [&](int wd) { return relation_generators(beta, wd, wd); });
}

FilteredQuotient QuotientEngine::mapping_torus_quotient(const BraidWord& beta, int D, int slack) const {
  return quotient(beta.strands + 1, D, slack, [&](int wd) { return mapping_torus_generators(beta, wd, wd); });
}

std::vector<Tensor> QuotientEngine::coinvariants(int arity, int D, CoactionKind kind) const {
  FilteredQuotient q;
  q.arity = arity;
  q.degree = D;
  q.working_degree = D;
  q.basis = make_basis(arity, D);
  return coinvariants(q, D, kind);
}

std::vector<Tensor> QuotientEngine::coinvariants(const FilteredQuotient& q, int D, CoactionKind kind) const {
  if (D < 0 || D > q.working_degree) throw std::invalid_argument("coinvariant degree outside the quotient's range");
  const TensorPower& T = power(q.arity);
  std::vector<TKey> unknowns;
  for (int d = 0; d <= D; ++d)
    for (auto& k : q.quotient_basis(d)) unknowns.push_back(std::move(k));

  // column j: normal form of coaction(m_j) - m_j (x) 1, split by the extra leg
  auto cols = parallel_map<std::map<std::pair<Word, int>, Rational>>(unknowns.size(), opts_.threads, [&](std::size_t j) {
    Tensor m = Tensor::pure(unknowns[j]);
    Tensor co = kind == CoactionKind::Total ? T.total_coaction(m) : T.braided_total_coaction(m);
    TKey unit_key = unknowns[j];
    unit_key.emplace_back();
    co.add(unit_key, -1);
    std::map<Word, Tensor> by_leg;
    for (const auto& [k, c] : co.terms()) {
      auto [it, fresh] = by_leg.try_emplace(k.back(), q.arity);
      it->second.add(TKey(k.begin(), k.end() - 1), c);
    }
    std::map<std::pair<Word, int>, Rational> col;
    for (const auto& [w, t] : by_leg)
      for (auto& [i, c] : q.normal_form(t)) col.emplace(std::make_pair(w, i), std::move(c));
    return col;
  });
  std::map<std::pair<Word, int>, std::size_t> rowidx;
  for (const auto& col : cols)
    for (const auto& [k, c] : col) rowidx.try_emplace(k, 0);
  std::size_t r = 0;
  for (auto& [k, i] : rowidx) i = r++;

  std::vector<std::vector<Rational>> sols;
  if (rowidx.empty()) {
    for (std::size_t j = 0; j < unknowns.size(); ++j) {
      std::vector<Rational> e(unknowns.size());
      e[j] = Rational(1);
      sols.push_back(std::move(e));
    }
  } else {
    RMatrix M(rowidx.size(), std::vector<Rational>(unknowns.size()));
    for (std::size_t j = 0; j < cols.size(); ++j)
      for (const auto& [k, c] : cols[j]) M[rowidx[k]][j] = c;
    sols = nullspace(std::move(M));
  }
  std::vector<Tensor> out;
  for (const auto& s : sols) {
    auto lv = clear_denominators(s);
    Tensor t(q.arity);
    for (std::size_t j = 0; j < lv.size(); ++j) t.add(unknowns[j], lv[j]);
    out.push_back(std::move(t));
  }
  return out;
}

std::size_t QuotientEngine::dense_rank_of(const std::vector<SparseRow>& rows, std::size_t columns) {
  RMatrix M(rows.size(), std::vector<Rational>(columns));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (const auto& [c, x] : rows[i]) M[i][static_cast<std::size_t>(c)] = Rational(x);
  return dense_rank(std::move(M));
}

// --- classical specialization ---

namespace {

using Mat = std::array<long, 4>;  // a b c d

long mod(long x, long p) {
  x %= p;
  return x < 0 ? x + p : x;
}

Mat mat_mul(const Mat& x, const Mat& y, long p) {
  return {mod(x[0] * y[0] + x[1] * y[2], p), mod(x[0] * y[1] + x[1] * y[3], p), mod(x[2] * y[0] + x[3] * y[2], p),
          mod(x[2] * y[1] + x[3] * y[3], p)};
}

Mat mat_inv(const Mat& x, long p) { return {x[3], mod(-x[1], p), mod(-x[2], p), x[0]}; }

std::vector<Mat> sl2_elements(long p) {
  std::vector<Mat> out;
  for (long a = 0; a < p; ++a)
    for (long b = 0; b < p; ++b)
      for (long c = 0; c < p; ++c)
        for (long d = 0; d < p; ++d)
          if (mod(a * d - b * c, p) == 1) out.push_back({a, b, c, d});
  return out;
}

void check_classical_limits(int n, unsigned p, std::uint64_t max_tuples) {
  if (!is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
  if (n > 3 || p > 7) throw ResourceError("classical point counts are limited to n <= 3 and p <= 7");
  std::uint64_t per = sl2_order(p), total = 1;
  for (int i = 0; i < n; ++i) total *= per;
  if (total > max_tuples)
    throw ResourceError("enumeration of " + std::to_string(total) + " tuples exceeds the limit " + std::to_string(max_tuples));
}

// calls f on every n-tuple of elements
template <class F>
void for_each_tuple(const std::vector<Mat>& els, int n, F&& f) {
  std::vector<std::size_t> idx(static_cast<std::size_t>(n), 0);
  std::vector<const Mat*> tup(static_cast<std::size_t>(n), &els[0]);
  for (;;) {
    f(tup);
    int k = n - 1;
    while (k >= 0) {
      auto uk = static_cast<std::size_t>(k);
      if (++idx[uk] < els.size()) {
        tup[uk] = &els[idx[uk]];
        break;
      }
      idx[uk] = 0;
      tup[uk] = &els[0];
      --k;
    }
    if (k < 0) return;
  }
}

// free-group word: letters +-(i+1)
using FWord = std::vector<int>;

FWord finverse(const FWord& w) {
  FWord out;
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(-*it);
  return out;
}

FWord freduce(const FWord& w) {
  FWord out;
  for (int x : w) {
    if (!out.empty() && out.back() == -x)
      out.pop_back();
    else
      out.push_back(x);
  }
  return out;
}

}  // namespace

std::uint64_t sl2_order(unsigned p) {
  std::uint64_t q = p;
  return q * (q * q - 1);
}

std::uint64_t artin_oracle_count(const BraidWord& beta, unsigned p) {
  const int n = beta.strands;
  // images of the generators under beta, composed letter by letter:
  // (s t)(x) = s(t(x)) means substituting t's images into the current map
  std::vector<FWord> img(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) img[static_cast<std::size_t>(i)] = {i + 1};
  for (const auto& l : beta.letters) {
    const int i = l.index - 1;
    std::vector<FWord> gen(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) gen[static_cast<std::size_t>(j)] = {j + 1};
    if (!l.inverse) {
      gen[static_cast<std::size_t>(i)] = {i + 1, i + 2, -(i + 1)};
      gen[static_cast<std::size_t>(i + 1)] = {i + 1};
    } else {
      gen[static_cast<std::size_t>(i)] = {i + 2};
      gen[static_cast<std::size_t>(i + 1)] = {-(i + 2), i + 1, i + 2};
    }
    // new map = current o letter
    std::vector<FWord> next(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) {
      FWord w;
      for (int x : gen[static_cast<std::size_t>(j)]) {
        const FWord& s = img[static_cast<std::size_t>(std::abs(x) - 1)];
        if (x > 0)
          w.insert(w.end(), s.begin(), s.end());
        else {
          FWord si = finverse(s);
          w.insert(w.end(), si.begin(), si.end());
        }
      }
      next[static_cast<std::size_t>(j)] = freduce(w);
    }
    img = std::move(next);
  }
  const long lp = static_cast<long>(p);
  auto els = sl2_elements(lp);
  std::uint64_t count = 0;
  for_each_tuple(els, n, [&](const std::vector<const Mat*>& tup) {
    for (int j = 0; j < n; ++j) {
      Mat m{1, 0, 0, 1};
      for (int x : img[static_cast<std::size_t>(j)]) {
        const Mat& g = *tup[static_cast<std::size_t>(std::abs(x) - 1)];
        m = mat_mul(m, x > 0 ? g : mat_inv(g, lp), lp);
      }
      if (m != *tup[static_cast<std::size_t>(j)]) return;
    }
    ++count;
  });
  return count;
}

PointCount QuotientEngine::classical_points(const BraidWord& beta, unsigned p, int degree) const {
  const int n = beta.strands;
  check_classical_limits(n, p, opts_.max_tuples);
  const long lp = static_cast<long>(p);
  // relation generators at v = 1, as polynomials in the matrix entries
  struct Term {
    long coef;
    std::vector<std::pair<int, int>> vars;  // (factor, entry)
  };
  std::vector<std::vector<Term>> polys;
  for (const auto& r : relation_generators(beta, degree)) {
    std::vector<Term> poly;
    for (const auto& [k, c] : r.terms()) {
      long cf = specialize_mod(c, lp);
      if (cf == 0) continue;
      Term t{cf, {}};
      for (std::size_t f = 0; f < k.size(); ++f)
        for (char g : k[f]) t.vars.emplace_back(static_cast<int>(f), static_cast<int>(g));
      poly.push_back(std::move(t));
    }
    if (!poly.empty()) polys.push_back(std::move(poly));
  }
  auto els = sl2_elements(lp);
  std::uint64_t count = 0;
  std::vector<Mat> X(static_cast<std::size_t>(n));
  for_each_tuple(els, n, [&](const std::vector<const Mat*>& tup) {
    // generator matrix of factor k is C gamma_k with C = (0 -1; 1 0)
    for (int k = 0; k < n; ++k) {
      const Mat& g = *tup[static_cast<std::size_t>(k)];
      X[static_cast<std::size_t>(k)] = {mod(-g[2], lp), mod(-g[3], lp), g[0], g[1]};
    }
    for (const auto& poly : polys) {
      long s = 0;
      for (const auto& t : poly) {
        long m = t.coef;
        for (const auto& [f, e] : t.vars) m = m * X[static_cast<std::size_t>(f)][static_cast<std::size_t>(e)] % lp;
        s += m;
      }
      if (mod(s, lp) != 0) return;
    }
    ++count;
  });
  PointCount pc;
  pc.p = p;
  pc.count = count;
  pc.oracle_count = artin_oracle_count(beta, p);
  return pc;
}

}  // namespace qskein
