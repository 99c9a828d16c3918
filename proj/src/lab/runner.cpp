#include "trilab/lab/runner.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <fstream>
#include <ostream>
#include <stdexcept>
#include <thread>

#include "trilab/bounds.hpp"
#include "trilab/energies.hpp"
#include "trilab/expansion.hpp"
#include "trilab/expsums.hpp"

namespace trilab::lab {

std::vector<ReportRow> run_jobs(const std::vector<Job>& jobs, std::size_t threads) {
  std::vector<std::vector<ReportRow>> results(jobs.size());
  std::vector<std::exception_ptr> errors(jobs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < jobs.size(); i = next++) {
      try {
        results[i] = jobs[i]();
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const std::size_t n = std::max<std::size_t>(1, std::min(threads, jobs.size()));
  if (n == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < n; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  std::vector<ReportRow> rows;
  for (auto& r : results) {
    rows.insert(rows.end(), std::make_move_iterator(r.begin()), std::make_move_iterator(r.end()));
  }
  return rows;
}

namespace {

constexpr double kAbsSlack = 1e-6;
constexpr double kRelTol = 1e-9;

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t a, std::uint64_t b = 0,
                          std::uint64_t c = 0) {
  SplitMix64 s(base);
  std::uint64_t h = s.next();
  for (std::uint64_t v : {a, b, c}) {
    SplitMix64 t(h ^ (v * 0xD6E8FEB86659FD93ULL));
    h = t.next();
  }
  return h >> 16;  // keeps descriptors short
}

bool close_rel(double a, double b, double tol = kRelTol) {
  return std::abs(a - b) <= tol * std::max(1.0, std::abs(b));
}

std::string exp_id(std::string_view prefix, std::uint32_t p, std::string_view family,
                   std::size_t index) {
  char buf[96];
  std::snprintf(buf, sizeof buf, "%.*s-p%07u-%.*s-%04zu", static_cast<int>(prefix.size()),
                prefix.data(), p, static_cast<int>(family.size()), family.data(), index);
  return buf;
}

std::string random_spec(std::size_t size, std::uint64_t seed) {
  return "random:" + std::to_string(size) + ":" + std::to_string(seed);
}

/// Random specs get their seed shifted by the repetition index.
std::string shift_spec(const std::string& spec, std::uint32_t rep) {
  if (rep == 0 || spec.rfind("random:", 0) != 0) return spec;
  const auto colon = spec.rfind(':');
  if (colon <= 7) return spec;
  return spec.substr(0, colon + 1) +
         std::to_string(std::stoull(spec.substr(colon + 1)) + rep);
}

double dbl(Count c) { return static_cast<double>(c); }

/// Collects the rows of one experiment instance.
class Recorder {
 public:
  Recorder(std::string id, Kind kind, std::uint32_t p, std::uint64_t seed)
      : id_(std::move(id)), kind_(kind_name(kind)), p_(p), seed_(seed) {}

  void use_sets(const std::vector<std::string>& specs, const std::vector<FpSet>& sets) {
    sets_.clear();
    for (std::size_t i = 0; i < specs.size(); ++i) {
      if (i) sets_ += ';';
      sets_ += specs[i];
    }
    std::vector<std::size_t> cards;
    for (const auto& s : sets) cards.push_back(s.size());
    cards_ = join_cards(cards);
  }

  void value(std::string quantity, double lhs, std::string method) {
    rows_.push_back(base(std::move(quantity), lhs, std::move(method)));
  }

  void bound(std::string quantity, double lhs, std::string name, double rhs, std::string method,
             bool hypothesis_ok = true) {
    ReportRow r = base(std::move(quantity), lhs, std::move(method));
    r.bound = hypothesis_ok ? name : name + "!hyp";
    r.rhs = rhs;
    if (rhs > 0.0) r.ratio = lhs / rhs;
    rows_.push_back(std::move(r));
  }

  void check(std::string quantity, double lhs, std::string name, double rhs, bool holds,
             std::string method) {
    bound(std::move(quantity), lhs, std::move(name), rhs, std::move(method));
    rows_.back().hard = true;
    rows_.back().violated = !holds;
  }

  std::vector<ReportRow> finish(double ms) {
    for (auto& r : rows_) r.ms = ms;
    return std::move(rows_);
  }

 private:
  ReportRow base(std::string quantity, double lhs, std::string method) const {
    ReportRow r;
    r.exp_id = id_;
    r.kind = std::string(kind_);
    r.p = p_;
    r.sets = sets_;
    r.cards = cards_;
    r.quantity = std::move(quantity);
    r.lhs = lhs;
    r.method = std::move(method);
    r.seed = seed_;
    return r;
  }

  std::string id_;
  std::string_view kind_;
  std::uint32_t p_;
  std::uint64_t seed_;
  std::string sets_;
  std::string cards_;
  std::vector<ReportRow> rows_;
};

std::vector<FpSet> parse_all(const Field& field, const std::vector<std::string>& specs) {
  std::vector<FpSet> sets;
  for (const auto& s : specs) sets.push_back(parse_set_spec(field, s));
  return sets;
}

std::vector<WeightTensor> omitting_weights(const std::vector<FpSet>& axes, WeightScheme scheme,
                                           std::uint64_t seed) {
  std::vector<WeightTensor> w;
  for (std::size_t i = 0; i < axes.size(); ++i) {
    w.push_back(WeightTensor::random(axes, i, scheme, derive_seed(seed, 0x7e, i)));
  }
  return w;
}

std::string_view path_name(SumPath path) { return path == SumPath::kNaive ? "naive" : "transform"; }

std::vector<std::size_t> sorted_desc(const std::vector<FpSet>& sets) {
  std::vector<std::size_t> c;
  for (const auto& s : sets) c.push_back(s.size());
  std::sort(c.rbegin(), c.rend());
  return c;
}

// Sums.

void record_sums(Recorder& rec, const std::vector<FpSet>& sets, WeightScheme scheme,
                 std::uint64_t seed, Residue twist) {
  const double p = sets[0].p();
  std::vector<WeightVec> w;
  for (std::size_t i = 0; i < sets.size(); ++i) {
    w.push_back(WeightVec::random(sets[i], scheme, derive_seed(seed, 0x5e, i)));
  }
  const auto c = sorted_desc(sets);
  if (sets.size() == 2) {
    const auto s = bilinear_sum(w[0], w[1], twist);
    const double rhs = std::sqrt(p * c[0] * c[1]);
    rec.check("abs_S2", std::abs(s.value), "sqrt_pAB", rhs, std::abs(s.value) <= rhs + kAbsSlack,
              "naive");
  } else if (sets.size() == 3) {
    const auto s = trilinear_sum_fast(w[0], w[1], w[2], twist);
    const double v = std::abs(s.value);
    const std::string m(path_name(s.path));
    rec.bound("abs_S3", v, "thm11", thm11_rhs(p, c[0], c[1], c[2]), m);
    rec.bound("abs_S3", v, "bg", bg_rhs(p, c[0], c[1], c[2]), m);
    const double triv = trivial_rhs(p, c[0], c[1], c[2]);
    rec.check("abs_S3", v, "trivial", triv, v <= triv + kAbsSlack, m);
    const auto t = multilinear_T(sets, omitting_weights(sets, scheme, seed), twist);
    const auto b13 = thm13_rhs(p, c[0], c[1], c[2]);
    rec.bound("abs_T3", std::abs(t.value), "thm13", b13.value, "naive", b13.hypothesis_ok);
  } else if (sets.size() == 4) {
    const auto s = quadrilinear_sum(w[0], w[1], w[2], w[3], twist);
    const auto b12 = thm12_rhs(p, c[0], c[1], c[2], c[3]);
    rec.bound("abs_S4", std::abs(s.value), "thm12", b12.value, "naive", b12.hypothesis_ok);
    const auto t = multilinear_T(sets, omitting_weights(sets, scheme, seed), twist);
    const auto b14 = thm14_rhs(p, c[0], c[1], c[2], c[3]);
    rec.bound("abs_T4", std::abs(t.value), "thm14", b14.value, "naive", b14.hypothesis_ok);
  } else {
    throw Error(ErrorCode::kConfigError, "sum experiments take 2, 3 or 4 sets");
  }
}

// Energies.

void record_energies(Recorder& rec, const FpSet& u, const FpSet& v, const FpSet& w) {
  const double p = u.p();
  const double nu = u.size(), nv = v.size(), nw = w.size();
  const auto n = count_N(u, v, w);
  const auto cb = counting_bounds(p, nu, nv, nw);
  rec.bound("N", dbl(n.value), "lemma23", cb.lemma23, "fast", nu * nv * nw <= p * p);
  rec.bound("N", dbl(n.value), "cor24", cb.cor24, "fast");
  const auto win = N_char_window(u, v, w);
  rec.check("N_window_dev", std::abs(dbl(win.n) - win.center), "pUVW", win.radius, win.holds(),
            "fast");
  const auto t = count_T(u);
  rec.bound("T", dbl(t.value), "lemma28", cb.lemma28, "fast");
  const auto dx = count_Dx(u);
  rec.bound("Dx", dbl(dx.value), "cor29", cb.cor29, "fast");
  const Count u2 = static_cast<Count>(u.size()) * u.size();
  const Count six = 2 * u2 * u.size() - u2;
  const Count dec = u2 * t.value + six * six;
  rec.check("Dx", dbl(dx.value), "U2T_plus_U6", dbl(dec), dx.value <= dec, "fast");
  rec.value("Ex", dbl(count_Ex(u).value), "fast");
  const auto k = K_value(v, w);
  const Count dyz = count_Dx(v).value * count_Dx(w).value;
  rec.check("K_squared", dbl(k.value * k.value), "DxY_DxZ", dbl(dyz), k.value * k.value <= dyz,
            "fast");
}

// Expansion.

void record_expansion(Recorder& rec, const std::vector<FpSet>& s) {
  const double p = s[0].p();
  if (s[0].size() >= s[1].size() && s[1].size() >= s[2].size()) {
    const auto img = image_ABC_plus_D(s[0], s[1], s[2], s[3]);
    rec.bound("ABC+D", static_cast<double>(img.size), "thm15_lower", img.lower, "bitset");
    rec.bound("ABC+D_deficit", std::abs(p - img.size), "thm15_error", img.error_term, "bitset");
  }
  const auto cube = image_cube_sum(s[0], s[1], s[2], s[3]);
  rec.bound("cube+D", static_cast<double>(cube.size), "thm17_lower", cube.lower, "bitset",
            cube.hypothesis_ok);
  rec.bound("cube+D_deficit", std::abs(p - cube.size), "thm17_error", cube.error_term, "bitset",
            cube.hypothesis_ok);
  const auto g = garaev_UV(s[0], s[1], s[2], s[3]);
  const double u = static_cast<double>(g.u), v = static_cast<double>(g.v);
  rec.bound("UV", u * v, "thm19_pA", g.disjunct1, "bitset");
  rec.bound("U3V2", u * u * u * v * v, "thm19_A4BC12D2/p", g.disjunct2, "bitset");
  rec.value("thm19_dichotomy_constant", g.dichotomy_constant(), "bitset");

  const Count zero = count_solutions_abcde_complement(s[0], s[1], s[2], s[3]);
  rec.check("abcde_complement", dbl(zero), "zero", 0.0, zero == 0, "spectrum");
  const double abcd = static_cast<double>(s[0].size()) * s[1].size() * s[2].size() * s[3].size();
  const auto j = spectrum_abc_plus_d(s[0], s[1], s[2], s[3]);
  rec.check("sum_J", static_cast<double>(j.total()), "ABCD", abcd, j.total() == abcd, "spectrum");
  const Count m2 = j.second_moment();
  const Count lhs = static_cast<Count>(j.total()) * j.total();
  const Count rhs = static_cast<Count>(image_abc_plus_d_set(s[0], s[1], s[2], s[3]).size()) * m2;
  rec.check("ABCD_squared", dbl(lhs), "image_times_sum_J2", dbl(rhs), lhs <= rhs, "spectrum");
  if (s.size() >= 5) {
    for (CoverShape shape : {CoverShape::kProduct, CoverShape::kCube}) {
      const auto cov = covers_field(shape, s[0], s[1], s[2], s[3], s[4]);
      const std::string name = shape == CoverShape::kProduct ? "cover_ABC+D+E" : "cover_cube+D+E";
      rec.value(name, cov.covers ? 1.0 : 0.0, "bitset");
      rec.value(name + "_quantity", cov.hypothesis_quantity, "bitset");
    }
  }
}

// Identity suite.

double orthogonality_sum(const FpSet& x) {
  const auto& f = *x.field();
  double total = 0.0;
  for (Residue lambda = 0; lambda < f.p(); ++lambda) {
    std::complex<double> s = 0.0;
    for (Residue a : x) s += f.add_char(f.mul(lambda, a));
    total += std::norm(s);
  }
  return total;
}

void identity_instance(Recorder& rec, const Field& field, const ExperimentConfig& cfg,
                       std::uint64_t seed) {
  const std::uint32_t p = field->p();
  SplitMix64 rng(seed);
  const std::size_t kmax = std::min<std::size_t>(8, p - 1);
  std::vector<std::string> specs;
  for (int i = 0; i < 4; ++i) specs.push_back(random_spec(1 + rng.below(kmax), rng.next() >> 16));
  const auto sets = parse_all(field, specs);
  rec.use_sets(specs, sets);
  const FpSet &u = sets[0], &v = sets[1], &w = sets[2], &x = sets[3];
  const Residue twist = static_cast<Residue>(1 + rng.below(p - 1));
  const double dp = p;

  record_sums(rec, {u, v}, cfg.weights, seed, twist);
  record_sums(rec, {u, v, w}, cfg.weights, seed, twist);

  const double orth = orthogonality_sum(u);
  rec.check("orthogonality", orth, "pX", dp * u.size(), close_rel(orth, dp * u.size()), "naive");

  record_energies(rec, u, v, w);
  const Count j2 = spectrum_J(v, w, JMode::kTriple).second_moment();
  const Count nzyy = count_N(w, v, v).value;
  rec.check("sum_J2", dbl(j2), "N_ZYY", dbl(nzyy), j2 == nzyy, "spectrum");
  const auto kid = K_char_identity(v, w);
  rec.check("K_chars", kid.via_chars, "K_direct", kid.direct, kid.agrees(), "chars");

  auto equal = [&](const char* q, const EnergyReport& fast, const EnergyReport& slow) {
    rec.check(q, dbl(fast.value), "oracle", dbl(slow.value), fast.value == slow.value, "fast");
  };
  equal("N", count_N(u, v, w), oracle_N(u, v, w));
  equal("T", count_T(u), oracle_T(u));
  equal("Dx", count_Dx(u), oracle_Dx(u));
  equal("Ex", count_Ex(u), oracle_Ex(u));

  for (std::size_t n = 2; n <= 4; ++n) {
    std::vector<FpSet> axes(sets.begin(), sets.begin() + static_cast<long>(n));
    const auto rc = reduction_check(axes, omitting_weights(axes, cfg.weights, seed + n), twist, n);
    rec.check("reduction_n" + std::to_string(n), rc.lhs, "cauchy_holder", rc.rhs, rc.holds(),
              "naive");
  }

  if (p > 2) {
    const double dc = double_char_max(v, w);
    const double rhs = std::sqrt(dp * v.size() * w.size());
    rec.check("double_char_max", dc, "sqrt_pVW", rhs, dc <= rhs + kAbsSlack, "chars");
  }

  std::vector<WeightVec> wv;
  for (std::size_t i = 0; i < 3; ++i) wv.push_back(WeightVec::random(sets[i], cfg.weights, seed + i));
  const auto naive = trilinear_sum(wv[0], wv[1], wv[2], twist).value;
  const auto fast = trilinear_sum_fast(wv[0], wv[1], wv[2], twist).value;
  rec.check("S3_transform", std::abs(fast - naive), "rel_1e-9", kRelTol * std::max(1.0, std::abs(naive)),
            std::abs(fast - naive) <= kRelTol * std::max(1.0, std::abs(naive)), "transform");

  record_expansion(rec, {u, v, w, x});

  // Enlarging A never shrinks ABC + D.
  std::vector<Residue> bigger(u.begin(), u.end());
  bigger.push_back(static_cast<Residue>(1 + rng.below(p - 1)));
  const FpSet u2(field, bigger);
  const double before = static_cast<double>(image_abc_plus_d_set(u, v, w, x).size());
  const double after = static_cast<double>(image_abc_plus_d_set(u2, v, w, x).size());
  rec.check("ABC+D_monotone", after, "before", before, after >= before, "bitset");
}

void identity_per_prime(Recorder& rec, const Field& field, std::uint64_t seed) {
  const std::uint32_t p = field->p();
  std::vector<std::string> specs;
  std::vector<FpSet> sets;
  for (std::uint32_t t = 2; t < p - 1; ++t) {
    if ((p - 1) % t != 0) continue;
    specs.push_back("subgroup:" + std::to_string(t));
    sets.push_back(subgroup(field, t));
  }
  rec.use_sets(specs, sets);
  for (const auto& g : sets) {
    const auto gr = garaev_UV(g, g, g, g);
    const std::string t = std::to_string(g.size());
    rec.check("U_subgroup_" + t, static_cast<double>(gr.u), "T", static_cast<double>(g.size()),
              gr.u >= g.size(), "bitset");
  }

  SplitMix64 rng(seed);
  const std::size_t half = p / 2 + 1;
  std::vector<std::string> big;
  for (int i = 0; i < 5; ++i) big.push_back(random_spec(half, rng.next() >> 16));
  const auto bs = parse_all(field, big);
  rec.use_sets(big, bs);
  for (CoverShape shape : {CoverShape::kProduct, CoverShape::kCube}) {
    const auto cov = covers_field(shape, bs[0], bs[1], bs[2], bs[3], bs[4]);
    rec.check(shape == CoverShape::kProduct ? "cover_ABC+D+E" : "cover_cube+D+E",
              static_cast<double>(cov.image_size), "p", static_cast<double>(p), cov.covers,
              "bitset");
  }
}

// Audit sweep.

struct AuditFamily {
  std::string name;
  std::vector<std::string> specs;  // four sets: A >= B >= C and a fourth of size A
};

std::vector<std::size_t> audit_sizes(std::uint32_t p) {
  const double dp = p;
  std::vector<std::size_t> s = {static_cast<std::size_t>(std::ceil(std::cbrt(dp))),
                                static_cast<std::size_t>(std::ceil(std::sqrt(dp))),
                                static_cast<std::size_t>(std::ceil(std::cbrt(dp * dp)))};
  for (auto& k : s) k = std::min<std::size_t>(k, p - 1);
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

std::vector<AuditFamily> audit_families(std::uint32_t p, std::uint64_t seed, std::uint32_t rep) {
  std::vector<AuditFamily> out;
  const auto sizes = audit_sizes(p);
  SplitMix64 rng(derive_seed(seed, p, rep, 0xA0));
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    for (std::size_t j = i; j < sizes.size(); ++j) {
      for (std::size_t k = j; k < sizes.size(); ++k) {
        const std::size_t a = sizes[k], b = sizes[j], c = sizes[i];
        AuditFamily r{"random", {}};
        for (std::size_t sz : {a, b, c, a}) r.specs.push_back(random_spec(sz, rng.next() >> 16));
        out.push_back(std::move(r));
        AuditFamily iv{"interval", {}};
        for (std::size_t sz : {a, b, c, a}) {
          iv.specs.push_back("interval:" + std::to_string(1 + rng.below(p - 1)) + ":" +
                             std::to_string(sz));
        }
        out.push_back(std::move(iv));
      }
    }
  }
  if (rep == 0) {
    const double cap = std::cbrt(static_cast<double>(p) * p);
    for (std::uint32_t t = 3; t <= cap && t < p - 1; ++t) {
      if ((p - 1) % t != 0) continue;
      const std::string g = "subgroup:" + std::to_string(t);
      out.push_back({"subgroup", {g, g, g, g}});
    }
  }
  return out;
}

void audit_instance(Recorder& rec, const Field& field, const AuditFamily& fam,
                    WeightScheme scheme, std::uint64_t seed) {
  const auto sets = parse_all(field, fam.specs);
  rec.use_sets(fam.specs, sets);
  const Residue twist = 1;
  record_sums(rec, {sets[0], sets[1], sets[2]}, scheme, seed, twist);
  record_sums(rec, {sets[3], sets[0], sets[1], sets[2]}, scheme, seed, twist);

  const double p = field->p();
  const FpSet &u = sets[0], &v = sets[1], &w = sets[2];
  const auto n = count_N(u, v, w);
  const auto cb = counting_bounds(p, u.size(), v.size(), w.size());
  const double uvw = static_cast<double>(u.size()) * v.size() * w.size();
  rec.bound("N", dbl(n.value), "lemma23", cb.lemma23, "fast", uvw <= p * p);
  rec.bound("N", dbl(n.value), "cor24", cb.cor24, "fast");
  rec.bound("T", dbl(count_T(u).value), "lemma28", cb.lemma28, "fast");
  rec.bound("Dx", dbl(count_Dx(u).value), "cor29", cb.cor29, "fast");

  record_expansion(rec, sets);

  if (fam.name == "subgroup") {
    const auto s = parse_set_spec(field, random_spec(u.size(), derive_seed(seed, 0x113)));
    const auto sg = subgroup_sumset_check(u, s);
    rec.bound("G+S", static_cast<double>(sg.size), "eq113", sg.rhs, "bitset");
  }
}

std::vector<Job> build_jobs(const ExperimentConfig& cfg) {
  std::vector<Job> jobs;
  const bool timing = cfg.timing;
  auto timed = [timing](auto body) {
    return [body, timing]() {
      const auto t0 = std::chrono::steady_clock::now();
      Recorder rec = body();
      const double ms =
          timing ? std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
                       .count()
                 : 0.0;
      return rec.finish(ms);
    };
  };

  for (std::uint32_t p : cfg.primes) {
    const Field field = make_field(p);
    for (std::uint32_t rep = 0; rep < cfg.reps; ++rep) {
      const std::uint64_t seed = derive_seed(cfg.seed, p, rep);
      std::vector<std::string> specs;
      for (const auto& s : cfg.sets) specs.push_back(shift_spec(s, rep));
      switch (cfg.kind) {
        case Kind::kSum:
          jobs.push_back(timed([=] {
            Recorder rec(exp_id("sum", p, "sets", rep), cfg.kind, p, seed);
            const auto sets = parse_all(field, specs);
            rec.use_sets(specs, sets);
            const Residue twist = static_cast<Residue>(1 + SplitMix64(seed).below(p - 1));
            record_sums(rec, sets, cfg.weights, seed, twist);
            return rec;
          }));
          break;
        case Kind::kEnergy:
          jobs.push_back(timed([=] {
            Recorder rec(exp_id("energy", p, "sets", rep), cfg.kind, p, seed);
            auto sets = parse_all(field, specs);
            if (sets.empty() || sets.size() > 3) {
              throw Error(ErrorCode::kConfigError, "energy experiments take 1 to 3 sets");
            }
            rec.use_sets(specs, sets);
            while (sets.size() < 3) sets.push_back(sets.back());
            record_energies(rec, sets[0], sets[1], sets[2]);
            return rec;
          }));
          break;
        case Kind::kExpansion:
          jobs.push_back(timed([=] {
            Recorder rec(exp_id("expansion", p, "sets", rep), cfg.kind, p, seed);
            const auto sets = parse_all(field, specs);
            if (sets.size() < 4 || sets.size() > 5) {
              throw Error(ErrorCode::kConfigError, "expansion experiments take 4 or 5 sets");
            }
            rec.use_sets(specs, sets);
            record_expansion(rec, sets);
            return rec;
          }));
          jobs.push_back(timed([=] {
            Recorder rec(exp_id("expansion", p, "c0", rep), cfg.kind, p, seed);
            for (CoverShape shape : {CoverShape::kProduct, CoverShape::kCube}) {
              const auto est = c0_threshold_search(field, shape, seed);
              const std::string name = shape == CoverShape::kProduct ? "c0_ABC+D+E" : "c0_cube+D+E";
              rec.value(name, est.quantity, "bisect");
              rec.value(name + "_size", static_cast<double>(est.threshold_size), "bisect");
            }
            return rec;
          }));
          break;
        case Kind::kIdentitySuite:
          jobs.push_back(timed([=] {
            Recorder rec(exp_id("identity", p, "random", rep), cfg.kind, p, seed);
            identity_instance(rec, field, cfg, seed);
            return rec;
          }));
          if (rep == 0) {
            jobs.push_back(timed([=] {
              Recorder rec(exp_id("identity", p, "structured", 0), cfg.kind, p, seed);
              identity_per_prime(rec, field, seed);
              return rec;
            }));
          }
          break;
        case Kind::kAuditBounds: {
          const auto fams = audit_families(p, cfg.seed, rep);
          for (std::size_t i = 0; i < fams.size(); ++i) {
            const auto fam = fams[i];
            const std::uint64_t s = derive_seed(seed, i);
            jobs.push_back(timed([=] {
              char fam_id[32];
              std::snprintf(fam_id, sizeof fam_id, "r%03u", rep);
              Recorder rec(exp_id("audit", p, fam.name + "-" + fam_id, i), cfg.kind, p, s);
              audit_instance(rec, field, fam, cfg.weights, s);
              return rec;
            }));
          }
          break;
        }
      }
    }
  }
  return jobs;
}

}  // namespace

RunResult run(const ExperimentConfig& config) {
  validate(config);
  RunResult out;
  out.rows = run_jobs(build_jobs(config), config.threads);
  sort_rows(out.rows);
  std::map<std::string, std::vector<double>> ratios;
  for (const auto& r : out.rows) {
    if (r.hard) {
      ++out.hard_checks;
      if (r.violated) ++out.violations;
    }
    if (!r.bound.empty() && r.ratio) ratios[r.bound].push_back(*r.ratio);
  }
  for (const auto& [name, v] : ratios) out.summary[name] = summarize(v);
  return out;
}

void write_report(const ExperimentConfig& config, const RunResult& result, std::ostream& fallback) {
  auto emit = [&](std::ostream& os) {
    if (config.format == Format::kJson) {
      write_json(os, result.rows);
    } else {
      write_csv(os, result.rows);
    }
  };
  if (config.out.empty()) {
    emit(fallback);
    return;
  }
  std::ofstream f(config.out, std::ios::binary);
  if (!f) throw Error(ErrorCode::kConfigError, "cannot write " + config.out);
  emit(f);
}

void write_summary(std::ostream& out, const RunResult& result) {
  out << "bound,count,max,mean,min\n";
  for (const auto& [name, s] : result.summary) {
    out << csv_field(name) << ',' << s.count << ',' << format_double(s.max) << ','
        << format_double(s.mean) << ',' << format_double(s.min) << '\n';
  }
}

}  // namespace trilab::lab
