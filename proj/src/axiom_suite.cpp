#include "qskein/axiom_suite.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <mutex>
#include <random>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace qskein {

namespace {

Tensor outer(const Tensor& a, const Tensor& b) {
  Tensor out(a.arity() + b.arity());
  for (const auto& [ka, ca] : a.terms())
    for (const auto& [kb, cb] : b.terms()) {
      TKey k = ka;
      k.insert(k.end(), kb.begin(), kb.end());
      out.add(std::move(k), ca * cb);
    }
  return out;
}

Tensor scalar(const Laurent& c) { return Tensor::pure(TKey{}, c); }
Tensor one_leg(const Poly& p) {
  Tensor t(1);
  for (const auto& [w, c] : p.terms()) t.add(TKey{w}, c);
  return t;
}

LinearMap memoized(LinearMap f) {
  struct Memo {
    std::mutex mu;
    std::map<TKey, Tensor> m;
  };
  auto memo = std::make_shared<Memo>();
  auto inner = f.on_key;
  f.on_key = [memo, inner](const TKey& k) {
    {
      std::lock_guard<std::mutex> lk(memo->mu);
      auto it = memo->m.find(k);
      if (it != memo->m.end()) return it->second;
    }
    Tensor r = inner(k);
    std::lock_guard<std::mutex> lk(memo->mu);
    return memo->m.emplace(k, std::move(r)).first->second;
  };
  return f;
}

std::uint64_t name_hash(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char ch : s) h = (h ^ ch) * 1099511628211ull;
  return h;
}

}  // namespace

// ---- LinearMap ------------------------------------------------------------

Tensor LinearMap::operator()(const Tensor& x) const {
  if (x.arity() != src)
    throw std::invalid_argument(name + ": input arity " + std::to_string(x.arity()) + " != " + std::to_string(src));
  Tensor out(tgt);
  for (const auto& [k, c] : x.terms()) out.add_scaled(on_key(k), c);
  return out;
}

LinearMap identity_map(int arity) {
  return {"id", arity, arity, [](const TKey& k) { return Tensor::pure(k); }};
}

LinearMap chain(const std::vector<LinearMap>& maps) {
  if (maps.empty()) throw std::invalid_argument("empty chain");
  std::string name;
  for (std::size_t i = 0; i < maps.size(); ++i) {
    if (i && maps[i - 1].tgt != maps[i].src)
      throw std::invalid_argument("chain: " + maps[i - 1].name + " has target arity " +
                                  std::to_string(maps[i - 1].tgt) + " but " + maps[i].name + " expects " +
                                  std::to_string(maps[i].src));
    name = i ? maps[i].name + " o " + name : maps[i].name;
  }
  auto ms = maps;
  return {"(" + name + ")", maps.front().src, maps.back().tgt, [ms](const TKey& k) {
            Tensor x = Tensor::pure(k);
            for (const auto& m : ms) x = m(x);
            return x;
          }};
}

LinearMap tensor(const std::vector<LinearMap>& maps) {
  if (maps.empty()) throw std::invalid_argument("empty tensor product");
  int src = 0, tgt = 0;
  std::string name;
  for (const auto& m : maps) {
    src += m.src;
    tgt += m.tgt;
    name += (name.empty() ? "" : " (x) ") + m.name;
  }
  auto ms = maps;
  return {"[" + name + "]", src, tgt, [ms, tgt](const TKey& k) {
            Tensor acc = Tensor::unit(0);
            std::size_t pos = 0;
            for (const auto& m : ms) {
              TKey part(k.begin() + static_cast<std::ptrdiff_t>(pos),
                        k.begin() + static_cast<std::ptrdiff_t>(pos + static_cast<std::size_t>(m.src)));
              pos += static_cast<std::size_t>(m.src);
              Tensor y = m.on_key(part);
              if (y.is_zero()) return Tensor(tgt);
              acc = outer(acc, y);
            }
            return acc;
          }};
}

LinearMap permute(const std::vector<int>& perm, const std::string& name) {
  const int n = static_cast<int>(perm.size());
  return {name, n, n, [perm](const TKey& k) {
            TKey out;
            out.reserve(perm.size());
            for (int i : perm) out.push_back(k[static_cast<std::size_t>(i)]);
            return Tensor::pure(out);
          }};
}

// ---- Primitives -----------------------------------------------------------

Primitives::Primitives(const BqContext& B) : B_(B) {
  const OqContext& O = B.oq();
  const BqContext* b = &B;
  const OqContext* o = &O;
  mu = {"mu", 2, 1, [b](const TKey& k) { return one_leg(b->rules().mul(k[0], k[1])); }};
  eta = {"eta", 0, 1, [](const TKey&) { return Tensor::pure(TKey{Word{}}); }};
  delta = {"Delta", 1, 2, [b](const TKey& k) { return b->coproduct(Poly::word(k[0])); }};
  eps = {"eps", 1, 0, [o](const TKey& k) { return scalar(o->counit(k[0])); }};
  S = {"S", 1, 1, [b](const TKey& k) { return one_leg(b->transmuted_antipode(Poly::word(k[0]))); }};
  braid = {"Psi0", 2, 2, [b](const TKey& k) { return b->braiding(k[0], k[1]); }};
  braid_inv = {"Psi0^-1", 2, 2, [b](const TKey& k) { return b->braiding_inv(k[0], k[1]); }};
  ad = {"AdB", 1, 2, [b](const TKey& k) { return b->braided_adjoint(k[0]); }};
  // both in O-coordinates, so that no conversion back to B-words is needed
  transmuted_mu = {"mu_transmuted", 2, 1,
                   [b](const TKey& k) { return one_leg(b->transmuted_mul_o(b->to_o(k[0]), b->to_o(k[1]))); }};
  presented_mu = {"to_O o mu", 2, 1, [b](const TKey& k) { return one_leg(b->to_o(b->rules().mul(k[0], k[1]))); }};
  auto functional = [b](const std::string& name, const Functional& f) {
    return LinearMap{name, 1, 0, [b, f](const TKey& k) { return scalar(f(b->to_o(k[0]))); }};
  };
  theta = functional("theta", O.theta());
  theta_inv = functional("theta^-1", O.theta_inv());
  t = functional("t", O.t());
  t_inv = functional("t^-1", O.t_inv());
  pairing = memoized(chain({tensor({delta, delta}), tensor({theta_inv, mu, theta_inv}), theta}));
  pairing.name = "B";
  pairing_minus = memoized(chain({tensor({delta, delta}), tensor({theta, chain({braid, mu}), theta}), theta_inv}));
  pairing_minus.name = "B^-";

  mu_o = {"mu_O", 2, 1, [o](const TKey& k) { return one_leg(o->rules().mul(k[0], k[1])); }};
  delta_o = {"Delta_O", 1, 2, [o](const TKey& k) { return o->coproduct(Poly::word(k[0])); }};
  r_o = {"r", 2, 0, [o](const TKey& k) { return scalar(o->r(k[0], k[1])); }};
}

LinearMap Primitives::power_mu(const TensorPower& T) const {
  const int n = T.arity();
  const TensorPower* tp = &T;
  return {"mu_" + std::to_string(n), 2 * n, n, [tp, n](const TKey& k) {
            return tp->mul(Tensor::pure(TKey(k.begin(), k.begin() + n)), Tensor::pure(TKey(k.begin() + n, k.end())));
          }};
}

LinearMap Primitives::power_mu_top(const TensorPower& T) const {
  const int n = T.arity();
  const TensorPower* tp = &T;
  return {"mu^top_" + std::to_string(n), 2 * n, n, [tp, n](const TKey& k) {
            return tp->twisted_opposite_mul(Tensor::pure(TKey(k.begin(), k.begin() + n)),
                                            Tensor::pure(TKey(k.begin() + n, k.end())));
          }};
}

// ---- AxiomCheck -----------------------------------------------------------

AxiomCheck::AxiomCheck(std::string name, std::string group, Space space, LinearMap left, LinearMap right,
                       SamplePlan plan)
    : name_(std::move(name)),
      group_(std::move(group)),
      space_(space),
      left_(std::move(left)),
      right_(std::move(right)),
      plan_(plan) {
  if (left_.src != right_.src || left_.tgt != right_.tgt)
    throw std::invalid_argument(name_ + ": sides have arities " + std::to_string(left_.src) + "->" +
                                std::to_string(left_.tgt) + " and " + std::to_string(right_.src) + "->" +
                                std::to_string(right_.tgt));
}

AxiomCheck::AxiomCheck(std::string name, std::string group, std::function<CheckResult()> custom)
    : name_(std::move(name)), group_(std::move(group)), custom_(std::move(custom)) {}

// ---- SuiteReport ----------------------------------------------------------

std::size_t SuiteReport::failures() const {
  return static_cast<std::size_t>(std::count_if(results.begin(), results.end(), [](const CheckResult& r) { return !r.passed; }));
}
bool SuiteReport::all_passed() const { return failures() == 0; }

std::string SuiteReport::table() const {
  std::size_t wn = 4, wg = 5;
  for (const auto& r : results) {
    wn = std::max(wn, r.name.size());
    wg = std::max(wg, r.group.size());
  }
  std::ostringstream os;
  auto pad = [](const std::string& s, std::size_t w) { return s + std::string(w > s.size() ? w - s.size() : 0, ' '); };
  os << pad("group", wg) << "  " << pad("name", wn) << "  inputs  status\n";
  for (const auto& r : results) {
    os << pad(r.group, wg) << "  " << pad(r.name, wn) << "  " << pad(std::to_string(r.inputs), 6) << "  "
       << (r.passed ? "pass" : "FAIL") << "\n";
    if (!r.passed) os << "    witness: " << r.witness << "\n";
  }
  os << results.size() - failures() << "/" << results.size() << " passed (degree " << degree << ", trials "
     << trials << ", seed " << seed << ")\n";
  return os.str();
}

// ---- AxiomSuite -----------------------------------------------------------

AxiomSuite::AxiomSuite(const BqContext& B, unsigned threads) : B_(B), P_(B), threads_(threads) {
  if (threads_ == 0) threads_ = std::max(1u, std::thread::hardware_concurrency());
  register_all();
}

std::size_t AxiomSuite::count(const std::string& group) const {
  return static_cast<std::size_t>(
      std::count_if(checks_.begin(), checks_.end(), [&](const AxiomCheck& a) { return a.group() == group; }));
}

void AxiomSuite::register_all() {
  const auto& P = P_;
  const LinearMap id = identity_map(1), id0 = identity_map(0);
  auto add = [this](std::string name, std::string group, LinearMap l, LinearMap r, SamplePlan plan = {},
                    Space sp = Space::B) {
    checks_.emplace_back(std::move(name), std::move(group), sp, std::move(l), std::move(r), plan);
  };

  // relation table row 1: braided Hopf algebra
  add("associativity", "hopf", chain({tensor({P.mu, id}), P.mu}), chain({tensor({id, P.mu}), P.mu}));
  add("left unit", "hopf", chain({tensor({P.eta, id}), P.mu}), id);
  add("right unit", "hopf", chain({tensor({id, P.eta}), P.mu}), id);
  add("coassociativity", "hopf", chain({P.delta, tensor({P.delta, id})}), chain({P.delta, tensor({id, P.delta})}));
  add("left counit", "hopf", chain({P.delta, tensor({P.eps, id})}), id);
  add("right counit", "hopf", chain({P.delta, tensor({id, P.eps})}), id);
  add("Delta multiplicative", "hopf", chain({P.mu, P.delta}),
      chain({tensor({P.delta, P.delta}), tensor({id, P.braid, id}), tensor({P.mu, P.mu})}));
  add("eps multiplicative", "hopf", chain({P.mu, P.eps}), tensor({P.eps, P.eps}));
  add("Delta unit", "hopf", chain({P.eta, P.delta}), tensor({P.eta, P.eta}));
  add("eps unit", "hopf", chain({P.eta, P.eps}), id0);
  add("left antipode", "hopf", chain({P.delta, tensor({P.S, id}), P.mu}), chain({P.eps, P.eta}));
  add("right antipode", "hopf", chain({P.delta, tensor({id, P.S}), P.mu}), chain({P.eps, P.eta}));
  add("S braided antimultiplicative", "hopf", chain({P.mu, P.S}), chain({tensor({P.S, P.S}), P.braid, P.mu}));

  // row 2: theta is a cotwist, B is compatible with the product
  add("theta unit", "cotwist", chain({P.eta, P.theta}), id0);
  add("theta S", "cotwist", chain({P.S, P.theta}), P.theta);
  add("theta * theta^-1", "cotwist", chain({P.delta, tensor({P.theta, P.theta_inv})}), P.eps);
  add("theta^-1 * theta", "cotwist", chain({P.delta, tensor({P.theta_inv, P.theta})}), P.eps);
  add("theta central", "cotwist", chain({P.delta, tensor({P.theta, id})}), chain({P.delta, tensor({id, P.theta})}));
  add("B left product", "cotwist", chain({tensor({P.mu, id}), P.pairing}),
      chain({tensor({id, id, P.delta}), tensor({id, P.braid, id}), tensor({P.pairing, P.pairing})}));
  add("B right product", "cotwist", chain({tensor({id, P.mu}), P.pairing}),
      chain({tensor({P.delta, id, id}), tensor({id, P.braid, id}), tensor({P.pairing, P.pairing})}));
  add("B left unit", "cotwist", chain({tensor({P.eta, id}), P.pairing}), P.eps);
  add("B right unit", "cotwist", chain({tensor({id, P.eta}), P.pairing}), P.eps);
  add("B antipode", "cotwist", chain({tensor({P.S, P.S}), P.pairing}), chain({P.braid_inv, P.pairing}));

  // row 3: the two BP relations
  add("B^- (S (x) id) = B", "bp", chain({tensor({P.S, id}), P.pairing_minus}), P.pairing);
  add("B^- (id (x) S) = B", "bp", chain({tensor({id, P.S}), P.pairing_minus}), P.pairing);

  SamplePlan words3;
  words3.generators = false;
  words3.all_words_degree = 3;
  words3.trials = 0;
  add("t * t = Theta", "half-twist", chain({P.delta, tensor({P.t, P.t})}), P.theta, words3);
  add("t * t^-1 = eps", "half-twist", chain({P.delta, tensor({P.t, P.t_inv})}), P.eps, words3);

  // (id (x) mu)(c (x) id)(id (x) Ad)c = (id (x) mu)(Ad (x) id)
  add("braided commutativity", "braided-commutativity",
      chain({P.braid, tensor({id, P.ad}), tensor({P.braid, id}), tensor({id, P.mu})}),
      chain({tensor({P.ad, id}), tensor({id, P.mu})}));

  const OqContext* o = &B_.oq();
  checks_.emplace_back("R-hat braid relation", "yang-baxter", [o] {
    CheckResult res;
    res.name = "R-hat braid relation";
    res.group = "yang-baxter";
    // matrix of r on the fundamental comodule: row (i,k), column (j,l) holds
    // r(x_ij (x) x_kl); R-hat is the flip after it
    std::array<std::array<Laurent, 4>, 4> Rh;
    for (int i = 0; i < 2; ++i)
      for (int k = 0; k < 2; ++k)
        for (int j = 0; j < 2; ++j)
          for (int l = 0; l < 2; ++l) Rh[2 * k + i][2 * j + l] = o->r_generator(2 * i + j, 2 * k + l);
    auto r12 = [&](int i, int j) {  // 8x8, index 4a + 2b + c
      if (i % 2 != j % 2) return Laurent();
      return Rh[i / 2][j / 2];
    };
    auto r23 = [&](int i, int j) {
      if (i / 4 != j / 4) return Laurent();
      return Rh[i % 4][j % 4];
    };
    auto mul = [](auto f, auto g) {
      std::array<std::array<Laurent, 8>, 8> m{};
      for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j)
          for (int k = 0; k < 8; ++k) m[i][j] += f(i, k) * g(k, j);
      return m;
    };
    auto a1 = mul(r12, r23);
    auto lhs = mul([&](int i, int j) { return a1[i][j]; }, r12);
    auto b1 = mul(r23, r12);
    auto rhs = mul([&](int i, int j) { return b1[i][j]; }, r23);
    res.inputs = 64;
    for (int i = 0; i < 8 && res.passed; ++i)
      for (int j = 0; j < 8; ++j)
        if (!(lhs[i][j] == rhs[i][j])) {
          res.passed = false;
          res.witness = "entry (" + std::to_string(i) + "," + std::to_string(j) + "): " + lhs[i][j].str() +
                        " vs " + rhs[i][j].str();
          break;
        }
    return res;
  });

  // sum r(x1 (x) y1) x2 y2 = sum y1 x1 r(x2 (x) y2) on O_q
  add("r dual-quasitriangular", "dual-quasitriangular",
      chain({tensor({P.delta_o, P.delta_o}), permute({0, 2, 1, 3}, "(23)"), tensor({P.r_o, P.mu_o})}),
      chain({tensor({P.delta_o, P.delta_o}), permute({2, 0, 1, 3}, "(132)"), tensor({P.mu_o, P.r_o})}), {},
      Space::O);

  for (int n = 1; n <= 2; ++n) {
    powers_.push_back(std::make_unique<TensorPower>(B_, n));
    const TensorPower& T = *powers_.back();
    const LinearMap idn = identity_map(n), top = P.power_mu_top(T), m = P.power_mu(T);
    std::vector<LinearMap> etas(static_cast<std::size_t>(n), P.eta);
    const LinearMap unit = tensor(etas);
    const TensorPower* tp = &T;
    const LinearMap tw{"theta_" + std::to_string(n), n, n, [tp](const TKey& k) { return tp->twist(Tensor::pure(k)); }};
    SamplePlan plan;
    plan.generators = n == 1;
    plan.degree = 1;
    const std::string sfx = " (n=" + std::to_string(n) + ")";
    add("mu^top left module" + sfx, "mu-top", chain({tensor({m, idn}), top}), chain({tensor({idn, top}), top}), plan);
    add("mu^top left unit" + sfx, "mu-top", chain({tensor({unit, idn}), top}), idn, plan);
    add("mu^top right unit" + sfx, "mu-top", chain({tensor({idn, unit}), top}), tw, plan);
  }

  add("transmuted product = presented product", "transmutation", P.transmuted_mu, P.presented_mu);
}

std::vector<Tensor> AxiomSuite::inputs(const AxiomCheck& a, int degree, int trials, std::uint64_t seed) const {
  const RewriteSystem& R = a.space() == Space::B ? B_.rules() : B_.oq().rules();
  const int k = a.left().src;
  const SamplePlan& plan = a.plan();
  std::vector<Tensor> out;
  if (k == 0) {
    out.push_back(Tensor::unit(0));
    return out;
  }
  auto words_upto = [&](int d) {
    std::vector<Word> ws;
    for (int e = 0; e <= d; ++e)
      for (auto& w : R.graded_basis(e)) ws.push_back(w);
    return ws;
  };
  // every tuple of words from ws with total length <= cap
  auto tuples = [&](const std::vector<Word>& ws, int cap) {
    std::vector<TKey> acc{TKey{}};
    for (int leg = 0; leg < k; ++leg) {
      std::vector<TKey> next;
      for (const auto& t : acc) {
        int used = 0;
        for (const auto& w : t) used += static_cast<int>(w.size());
        for (const auto& w : ws)
          if (used + static_cast<int>(w.size()) <= cap) {
            TKey u = t;
            u.push_back(w);
            next.push_back(std::move(u));
          }
      }
      acc = std::move(next);
    }
    for (auto& t : acc) out.push_back(Tensor::pure(t));
  };
  if (plan.all_words_degree >= 0) {
    tuples(words_upto(plan.all_words_degree), plan.all_words_degree);
  } else if (plan.generators) {
    tuples(words_upto(std::min(1, degree)), k * std::min(1, degree));
  }
  const int d = plan.degree >= 0 ? std::min(plan.degree, degree) : degree;
  const int n = plan.trials >= 0 ? plan.trials : trials;
  const auto pool = words_upto(d);
  std::mt19937_64 rng(seed ^ name_hash(a.name()));
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  std::uniform_int_distribution<int> coef(-2, 1);  // -2..1 shifted past 0
  std::uniform_int_distribution<int> terms(1, 2);
  auto element = [&]() {
    Tensor e(1);
    int m = terms(rng);
    for (int i = 0; i < m; ++i) {
      int c = coef(rng);
      if (c >= 0) ++c;
      e.add(TKey{pool[pick(rng)]}, c);
    }
    return e;
  };
  for (int t = 0; t < n; ++t) {
    Tensor x(k);
    for (int s = 0; s < 2; ++s) {
      Tensor p = Tensor::unit(0);
      for (int leg = 0; leg < k; ++leg) p = outer(p, element());
      x += p;
    }
    out.push_back(std::move(x));
  }
  return out;
}

CheckResult AxiomSuite::check(const AxiomCheck& a, int degree, int trials, std::uint64_t seed) const {
  if (a.is_custom()) return a.run_custom();
  CheckResult res;
  res.name = a.name();
  res.group = a.group();
  const RewriteSystem& R = a.space() == Space::B ? B_.rules() : B_.oq().rules();
  for (const auto& x : inputs(a, degree, trials, seed)) {
    ++res.inputs;
    Tensor diff = a.left()(x) - a.right()(x);
    if (!diff.is_zero()) {
      res.passed = false;
      auto clip = [](std::string t) { return t.size() > 400 ? t.substr(0, 400) + " ..." : t; };
      res.witness = "input " + clip(x.str(R)) + ": left - right = " + clip(diff.str(R));
      break;
    }
  }
  return res;
}

SuiteReport AxiomSuite::run(const std::vector<std::string>& groups, int degree, int trials, std::uint64_t seed) const {
  if (degree < 0 || trials < 0) throw std::invalid_argument("degree and trials must be >= 0");
  std::vector<const AxiomCheck*> todo;
  for (const auto& a : checks_)
    if (groups.empty() || std::find(groups.begin(), groups.end(), a.group()) != groups.end()) todo.push_back(&a);
  SuiteReport rep;
  rep.degree = degree;
  rep.trials = trials;
  rep.seed = seed;
  rep.results.resize(todo.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next++) < todo.size();) {
      try {
        rep.results[i] = check(*todo[i], degree, trials, seed);
      } catch (const std::exception& e) {
        rep.results[i] = CheckResult{todo[i]->name(), todo[i]->group(), 0, false, std::string("error: ") + e.what()};
      }
    }
  };
  std::vector<std::thread> pool;
  const unsigned nt = std::min<unsigned>(threads_, static_cast<unsigned>(todo.size()));
  for (unsigned t = 1; t < nt; ++t) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  return rep;
}

SuiteReport AxiomSuite::run_all(int degree, int trials, std::uint64_t seed) const { return run({}, degree, trials, seed); }

}  // namespace qskein
