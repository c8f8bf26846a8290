#include "qschur/verify.hpp"

#include <array>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <ostream>
#include <random>
#include <stdexcept>
#include <thread>

namespace qschur {

SuiteConfig SuiteConfig::make(int n, int r) {
    SuiteConfig cfg;
    cfg.n = n;
    cfg.r = r;
    cfg.window_lo = -n;
    cfg.window_hi = 2 * n;
    return cfg;
}

int worker_count() {
    const char* env = std::getenv("QSCHUR_WORKERS");
    if (!env)
        return 1;
    int w = std::atoi(env);
    if (w < 1)
        return 1;
    return std::min(w, 64);
}

namespace {

using Clock = std::chrono::steady_clock;

void validate_config(const SuiteConfig& cfg) {
    if (cfg.n < 2)
        throw std::domain_error("SuiteConfig: n must be >= 2");
    if (cfg.r < 1)
        throw std::domain_error("SuiteConfig: r must be >= 1");
    if (cfg.t_max < 1)
        throw std::domain_error("SuiteConfig: t_max must be >= 1");
    if (cfg.window_lo <= cfg.window_hi &&
        (cfg.window_lo > 1 || cfg.window_hi < cfg.n))
        throw std::domain_error("SuiteConfig: window must contain [1, n]");
}

std::string window_str(const SuiteConfig& cfg) {
    return std::to_string(cfg.window_lo) + ".." + std::to_string(cfg.window_hi);
}

std::vector<IndexTuple> window_tuples(int r, int lo, int hi) {
    std::vector<IndexTuple> out;
    if (lo > hi)
        return out;
    const long width = hi - lo + 1;
    long total = 1;
    for (int k = 0; k < r; ++k)
        total *= width;
    out.reserve(total);
    IndexTuple idx(r, lo);
    for (long t = 0; t < total; ++t) {
        out.push_back(idx);
        for (int k = r - 1; k >= 0; --k) {
            if (++idx[k] <= hi)
                break;
            idx[k] = lo;
        }
    }
    return out;
}

/// A named operator-identity check evaluated on one pure tensor.
struct OpCheck {
    std::string name;
    std::function<std::pair<TensorElt, TensorElt>(const TensorElt&)> sides;
};

void run_tensor_cases(const std::vector<OpCheck>& checks,
                      const std::vector<IndexTuple>& tuples, int modulus,
                      Report& rep) {
    const long per = static_cast<long>(tuples.size());
    const long total = static_cast<long>(checks.size()) * per;
    rep.cases_checked += total;
    if (total == 0)
        return;

    auto run_range = [&](long beg, long end, std::vector<Failure>& out) {
        for (long c = beg; c < end; ++c) {
            const OpCheck& chk = checks[c / per];
            const IndexTuple& idx = tuples[c % per];
            TensorElt v = TensorElt::pure(idx, modulus);
            auto [lhs, rhs] = chk.sides(v);
            if (!(lhs == rhs))
                out.push_back({chk.name + " @ " + v.str(), lhs.str(), rhs.str()});
        }
    };

    const int workers = std::min<long>(worker_count(), total);
    if (workers <= 1) {
        run_range(0, total, rep.failures);
        return;
    }
    std::vector<std::vector<Failure>> parts(workers);
    std::vector<std::thread> threads;
    const long chunk = (total + workers - 1) / workers;
    for (int w = 0; w < workers; ++w) {
        long beg = w * chunk, end = std::min(total, beg + chunk);
        if (beg >= end)
            break;
        threads.emplace_back(run_range, beg, end, std::ref(parts[w]));
    }
    for (auto& t : threads)
        t.join();
    for (auto& p : parts)
        for (auto& f : p)
            rep.failures.push_back(std::move(f));
}

void finish(Report& rep, Clock::time_point start, bool report_only = false) {
    rep.status = report_only
                     ? SuiteStatus::report_only
                     : (rep.failures.empty() ? SuiteStatus::pass : SuiteStatus::fail);
    rep.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                         Clock::now() - start)
                         .count();
}

int cartan(int i, int j, int n) {
    if (i == j)
        return 2;
    if (n == 2)
        return -2;
    int d = std::abs(i - j);
    return (d == 1 || d == n - 1) ? -1 : 0;
}

int succ(int i, int n) { return i % n + 1; }

TensorElt apply_seq(const std::vector<GenLabel>& word, const TensorElt& v) {
    TensorElt acc = v;
    for (auto it = word.rbegin(); it != word.rend(); ++it)
        acc = act_left(*it, acc);
    return acc;
}

TensorElt apply_hgen_power(const HeckeGen& g, int times, const TensorElt& v) {
    TensorElt acc = v;
    for (int k = 0; k < times; ++k)
        acc = act_right(g, acc);
    return acc;
}

} // namespace

// ---------------------------------------------------------------------------

Report verify_qgl(const SuiteConfig& cfg) {
    validate_config(cfg);
    auto start = Clock::now();
    Report rep;
    rep.suite = "qgl";
    rep.config = {{"n", std::to_string(cfg.n)},
                  {"r", std::to_string(cfg.r)},
                  {"window", window_str(cfg)},
                  {"t_max", std::to_string(cfg.t_max)}};

    const int n = cfg.n;
    std::vector<OpCheck> checks;
    auto E = [](int i) { return GenLabel::E(i); };
    auto F = [](int i) { return GenLabel::F(i); };
    auto Kp = [](int i) { return GenLabel::Kp(i); };
    auto Km = [](int i) { return GenLabel::Km(i); };

    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            checks.push_back({"QGL1 K" + std::to_string(i) + " K" + std::to_string(j),
                              [=](const TensorElt& v) {
                                  return std::pair(apply_seq({Kp(i), Kp(j)}, v),
                                                   apply_seq({Kp(j), Kp(i)}, v));
                              }});
    for (int i = 1; i <= n; ++i)
        checks.push_back({"QGL1 K" + std::to_string(i) + " K^-1",
                          [=](const TensorElt& v) {
                              return std::pair(apply_seq({Kp(i), Km(i)}, v), v);
                          }});

    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            int e = (i == j ? 1 : 0) - (i == succ(j, n) ? 1 : 0);
            checks.push_back(
                {"QGL2 K" + std::to_string(i) + " E" + std::to_string(j),
                 [=](const TensorElt& v) {
                     TensorElt lhs = apply_seq({Kp(i), E(j)}, v);
                     TensorElt rhs = apply_seq({E(j), Kp(i)}, v) *
                                     LaurentQA::var_q(e);
                     return std::pair(lhs, rhs);
                 }});
            checks.push_back(
                {"QGL2 K" + std::to_string(i) + " F" + std::to_string(j),
                 [=](const TensorElt& v) {
                     TensorElt lhs = apply_seq({Kp(i), F(j)}, v);
                     TensorElt rhs = apply_seq({F(j), Kp(i)}, v) *
                                     LaurentQA::var_q(-e);
                     return std::pair(lhs, rhs);
                 }});
        }

    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            checks.push_back(
                {"QGL3 E" + std::to_string(i) + " F" + std::to_string(j),
                 [=](const TensorElt& v) {
                     TensorElt lhs =
                         apply_seq({E(i), F(j)}, v) - apply_seq({F(j), E(i)}, v);
                     TensorElt rhs(v.rank(), v.modulus());
                     if (i == j) {
                         // K~_i is diagonal on a pure tensor, so the right
                         // side is the balanced q-integer of its exponent
                         const auto& idx = v.terms().begin()->first;
                         Weight w = weight_of(idx, v.modulus());
                         int d = w.counts[i - 1] - w.counts[succ(i, n) - 1];
                         rhs = v * qint(d);
                     }
                     return std::pair(lhs, rhs);
                 }});

    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            if (i == j)
                continue;
            const int N = 1 - cartan(i, j, n);
            checks.push_back(
                {"QGL4 Serre E" + std::to_string(i) + " E" + std::to_string(j),
                 [=](const TensorElt& v) {
                     TensorElt acc(v.rank(), v.modulus());
                     for (int a = 0; a <= N; ++a) {
                         std::vector<GenLabel> word;
                         for (int k = 0; k < a; ++k)
                             word.push_back(E(i));
                         word.push_back(E(j));
                         for (int k = 0; k < N - a; ++k)
                             word.push_back(E(i));
                         LaurentQA c = qbinom(N, a);
                         if (a % 2)
                             c = -c;
                         acc += apply_seq(word, v) * c;
                     }
                     return std::pair(acc, TensorElt(v.rank(), v.modulus()));
                 }});
            checks.push_back(
                {"QGL5 Serre F" + std::to_string(i) + " F" + std::to_string(j),
                 [=](const TensorElt& v) {
                     TensorElt acc(v.rank(), v.modulus());
                     for (int a = 0; a <= N; ++a) {
                         std::vector<GenLabel> word;
                         for (int k = 0; k < a; ++k)
                             word.push_back(F(i));
                         word.push_back(F(j));
                         for (int k = 0; k < N - a; ++k)
                             word.push_back(F(i));
                         LaurentQA c = qbinom(N, a);
                         if (a % 2)
                             c = -c;
                         acc += apply_seq(word, v) * c;
                     }
                     return std::pair(acc, TensorElt(v.rank(), v.modulus()));
                 }});
        }

    auto zlabel = [](int t, Sign s) {
        return s == Sign::plus ? GenLabel::Zp(t) : GenLabel::Zm(t);
    };
    for (int s = 1; s <= cfg.t_max; ++s)
        for (int t = 1; t <= cfg.t_max; ++t) {
            if (s < t) {
                for (Sign sg : {Sign::plus, Sign::minus})
                    checks.push_back(
                        {"QGL6 z commute tt " + std::to_string(s) + "," +
                             std::to_string(t) + (sg == Sign::plus ? "+" : "-"),
                         [=](const TensorElt& v) {
                             return std::pair(
                                 act_left(zlabel(s, sg), act_left(zlabel(t, sg), v)),
                                 act_left(zlabel(t, sg), act_left(zlabel(s, sg), v)));
                         }});
            }
            checks.push_back(
                {"QGL6 z commute +- " + std::to_string(s) + "," + std::to_string(t),
                 [=](const TensorElt& v) {
                     return std::pair(
                         act_left(zlabel(s, Sign::plus),
                                  act_left(zlabel(t, Sign::minus), v)),
                         act_left(zlabel(t, Sign::minus),
                                  act_left(zlabel(s, Sign::plus), v)));
                 }});
        }

    for (int i = 1; i <= n; ++i)
        for (int t = 1; t <= cfg.t_max; ++t)
            for (Sign sg : {Sign::plus, Sign::minus}) {
                std::string suffix = std::to_string(i) + " z" + std::to_string(t) +
                                     (sg == Sign::plus ? "+" : "-");
                checks.push_back({"QGL7 K" + suffix,
                                  [=](const TensorElt& v) {
                                      return std::pair(
                                          act_left(Kp(i), act_left(zlabel(t, sg), v)),
                                          act_left(zlabel(t, sg), act_left(Kp(i), v)));
                                  }});
                checks.push_back({"QGL8 E" + suffix,
                                  [=](const TensorElt& v) {
                                      return std::pair(
                                          act_left(E(i), act_left(zlabel(t, sg), v)),
                                          act_left(zlabel(t, sg), act_left(E(i), v)));
                                  }});
                checks.push_back({"QGL8 F" + suffix,
                                  [=](const TensorElt& v) {
                                      return std::pair(
                                          act_left(F(i), act_left(zlabel(t, sg), v)),
                                          act_left(zlabel(t, sg), act_left(F(i), v)));
                                  }});
            }

    auto tuples = window_tuples(cfg.r, cfg.window_lo, cfg.window_hi);
    run_tensor_cases(checks, tuples, cfg.n, rep);
    finish(rep, start);
    return rep;
}

// ---------------------------------------------------------------------------

Report verify_affine_hecke(const SuiteConfig& cfg) {
    validate_config(cfg);
    auto start = Clock::now();
    Report rep;
    rep.suite = "affine-hecke";
    rep.config = {{"n", std::to_string(cfg.n)},
                  {"r", std::to_string(cfg.r)},
                  {"window", window_str(cfg)}};

    auto relations = affine_hecke_relations(cfg.r);
    std::vector<OpCheck> checks;
    for (const auto& rel : relations) {
        checks.push_back({rel.name, [rel](const TensorElt& v) {
                              TensorElt lhs(v.rank(), v.modulus());
                              TensorElt rhs(v.rank(), v.modulus());
                              for (const auto& [c, word] : rel.lhs)
                                  lhs += act_right_word(word, v) * c;
                              for (const auto& [c, word] : rel.rhs)
                                  rhs += act_right_word(word, v) * c;
                              return std::pair(lhs, rhs);
                          }});
    }
    auto tuples = window_tuples(cfg.r, cfg.window_lo, cfg.window_hi);
    run_tensor_cases(checks, tuples, cfg.n, rep);

    // the same X-free relations hold inside H(r) itself, multiplied out on
    // the T_w basis directly
    auto t_product = [&](const AffineWord& word) {
        HeckeElt acc = HeckeElt::unit(cfg.r) * word.scalar;
        for (const auto& letter : word.letters)
            acc = acc.times_gen(letter.index);
        return acc;
    };
    for (const auto& rel : relations) {
        if (!rel.t_only)
            continue;
        ++rep.cases_checked;
        HeckeElt lhs(cfg.r), rhs(cfg.r);
        for (const auto& [c, word] : rel.lhs)
            lhs += t_product(word) * c;
        for (const auto& [c, word] : rel.rhs)
            rhs += t_product(word) * c;
        if (!(lhs == rhs))
            rep.failures.push_back({rel.name + " in H(r)", lhs.str(), rhs.str()});
    }
    finish(rep, start);
    return rep;
}

// ---------------------------------------------------------------------------

Report verify_commuting(const SuiteConfig& cfg) {
    validate_config(cfg);
    auto start = Clock::now();
    Report rep;
    rep.suite = "commuting";
    rep.config = {{"n", std::to_string(cfg.n)},
                  {"r", std::to_string(cfg.r)},
                  {"window", window_str(cfg)},
                  {"t_max", std::to_string(cfg.t_max)}};

    std::vector<GenLabel> lefts;
    for (int i = 1; i <= cfg.n; ++i) {
        lefts.push_back(GenLabel::E(i));
        lefts.push_back(GenLabel::F(i));
        lefts.push_back(GenLabel::Kp(i));
        lefts.push_back(GenLabel::Km(i));
    }
    for (int t = 1; t <= cfg.t_max; ++t) {
        lefts.push_back(GenLabel::Zp(t));
        lefts.push_back(GenLabel::Zm(t));
    }
    std::vector<HeckeGen> rights;
    for (int k = 1; k <= cfg.r - 1; ++k)
        rights.push_back(HeckeGen::T(k));
    for (int t = 1; t <= cfg.r; ++t) {
        rights.push_back(HeckeGen::Xp(t));
        rights.push_back(HeckeGen::Xm(t));
    }

    std::vector<OpCheck> checks;
    for (const auto& g : lefts)
        for (const auto& h : rights)
            checks.push_back({g.str() + " vs " + h.str(),
                              [=](const TensorElt& v) {
                                  return std::pair(
                                      act_left(g, act_right(h, v)),
                                      act_right(h, act_left(g, v)));
                              }});
    auto tuples = window_tuples(cfg.r, cfg.window_lo, cfg.window_hi);
    run_tensor_cases(checks, tuples, cfg.n, rep);
    finish(rep, start);
    return rep;
}

// ---------------------------------------------------------------------------

Report verify_eval_compat(const SuiteConfig& cfg, EvalWhich which) {
    validate_config(cfg);
    auto start = Clock::now();
    Report rep;
    rep.suite = which == EvalWhich::En ? "eval-compat-En" : "eval-compat-Fn";
    rep.config = {{"n", std::to_string(cfg.n)}, {"r", std::to_string(cfg.r)}};

    std::vector<OpCheck> checks;
    if (which == EvalWhich::En) {
        checks.push_back({"eps_a(E_n v) = Ev(E_n) v", [](const TensorElt& v) {
                              GenLabel En = GenLabel::E(v.modulus());
                              return std::pair(eps_a(act_left(En, v)),
                                               apply_Ev_En(v));
                          }});
    } else {
        checks.push_back({"eps_a(F_n v) = Ev(F_n) v", [](const TensorElt& v) {
                              GenLabel Fn = GenLabel::F(v.modulus());
                              return std::pair(eps_a(act_left(Fn, v)),
                                               apply_Ev_Fn(v));
                          }});
    }
    auto tuples = window_tuples(cfg.r, 1, cfg.n);
    run_tensor_cases(checks, tuples, cfg.n, rep);
    finish(rep, start, which == EvalWhich::Fn);
    return rep;
}

// ---------------------------------------------------------------------------

Report verify_lemmas(const SuiteConfig& cfg) {
    validate_config(cfg);
    auto start = Clock::now();
    Report rep;
    rep.suite = "lemmas";
    rep.config = {{"n", std::to_string(cfg.n)},
                  {"r", std::to_string(cfg.r)},
                  {"window", window_str(cfg)},
                  {"t_max", std::to_string(cfg.t_max)}};

    const int n = cfg.n, r = cfg.r;
    const LaurentQA q2m1 = LaurentQA::var_q(2) - LaurentQA(1);

    // sweep formula: u_{la,1} T_1...T_k
    for (const auto& la : enumerate_compositions(n, r)) {
        for (int k = 1; k <= la.parts[0] - 1; ++k) {
            ++rep.cases_checked;
            TensorElt lhs = TensorElt::pure(u_lambda_j(la, 1), n);
            for (int i = 1; i <= k; ++i)
                lhs = act_right(HeckeGen::T(i), lhs);
            TensorElt rhs =
                TensorElt::pure(u_lambda_j(la, k + 1), n) * LaurentQA::var_q(k);
            for (int s = 1; s <= k; ++s)
                rhs += TensorElt::pure(u_lambda_j(la, s), n) *
                       (q2m1 * LaurentQA::var_q(2 * k - s - 1));
            if (!(lhs == rhs))
                rep.failures.push_back({"sweep " + la.str() + " k=" + std::to_string(k),
                                        lhs.str(), rhs.str()});
        }
    }

    // nested commutator on row tensors with an arbitrary tail in [k,n]
    for (const auto& la : enumerate_compositions(n, r)) {
        for (int k = 2; k <= n; ++k) {
            int head = 0;
            for (int i = 0; i < k - 1; ++i)
                head += la.parts[i];
            if (head > r)
                continue;
            IndexTuple prefix;
            for (int i = 1; i <= k - 1; ++i)
                for (int c = 0; c < la.parts[i - 1]; ++c)
                    prefix.push_back(i);
            for (const auto& tail : window_tuples(r - head, k, n)) {
                ++rep.cases_checked;
                IndexTuple idx = prefix;
                idx.insert(idx.end(), tail.begin(), tail.end());
                TensorElt lhs = apply_fk(k, TensorElt::pure(idx, n));
                TensorElt rhs(r, n);
                const int la1 = la.parts[0];
                for (int s = 1; s <= la1; ++s) {
                    IndexTuple out = idx;
                    out[s - 1] = k; // w_1^{s-1} w_k w_1^{la1-s} ...
                    rhs += TensorElt::pure(out, n) * LaurentQA::var_q(1 - s);
                }
                if (!(lhs == rhs))
                    rep.failures.push_back(
                        {"commutator " + la.str() + " k=" + std::to_string(k) +
                             " tail=" + TensorElt::pure(idx, n).str(),
                         lhs.str(), rhs.str()});
            }
        }
    }

    // central shifts equal X power sums
    {
        std::vector<OpCheck> checks;
        for (int t = 1; t <= cfg.t_max; ++t)
            for (Sign sg : {Sign::plus, Sign::minus}) {
                GenLabel z = sg == Sign::plus ? GenLabel::Zp(t) : GenLabel::Zm(t);
                checks.push_back(
                    {"central z" + std::to_string(t) + (sg == Sign::plus ? "+" : "-"),
                     [=](const TensorElt& v) {
                         TensorElt lhs = act_left(z, v);
                         TensorElt rhs(v.rank(), v.modulus());
                         for (int s = 1; s <= v.rank(); ++s) {
                             HeckeGen x = sg == Sign::plus ? HeckeGen::Xp(s)
                                                           : HeckeGen::Xm(s);
                             rhs += apply_hgen_power(x, t, v);
                         }
                         return std::pair(lhs, rhs);
                     }});
            }
        auto tuples = window_tuples(r, cfg.window_lo, cfg.window_hi);
        run_tensor_cases(checks, tuples, n, rep);
    }

    finish(rep, start);
    return rep;
}

// ---------------------------------------------------------------------------

Report verify_jm(int r, int t_max) {
    if (r < 1)
        throw std::domain_error("verify_jm: r must be >= 1");
    if (r > 5)
        throw std::domain_error(
            "verify_jm: refusing r > 5 (the Murphy transition matrix has r! "
            "columns and exact elimination becomes too costly)");
    if (t_max < 1)
        throw std::domain_error("verify_jm: t_max must be >= 1");
    auto start = Clock::now();
    Report rep;
    rep.suite = "jm";
    rep.config = {{"r", std::to_string(r)}, {"t_max", std::to_string(t_max)}};

    MurphyBasis::get(r); // build the cache up front

    for (const auto& la : partitions_of(r)) {
        const Composition comp = la.as_composition(la.num_parts());
        const HeckeElt xl = x_lambda(comp);
        for (int t = 1; t <= t_max; ++t) {
            for (Sign sg : {Sign::plus, Sign::minus}) {
                for (int s = 1; s <= r; ++s) {
                    ++rep.cases_checked;
                    if (!residue_congruence(la, s, t, sg)) {
                        HeckeElt lhs = xl * murphy_L_power(s, r, t, sg);
                        Monomial res =
                            residue(la, s).pow(sg == Sign::plus ? t : -t);
                        rep.failures.push_back(
                            {"residue congruence " + la.str() + " s=" +
                                 std::to_string(s) + " t=" + std::to_string(t) +
                                 (sg == Sign::plus ? " +" : " -"),
                             lhs.str(), (xl * LaurentQA(res)).str()});
                    }
                }
                // aggregate: x_la sum_s L_s^{+-t} = c_t^{+-} x_la mod ideal
                ++rep.cases_checked;
                HeckeElt lhs(r);
                for (int s = 1; s <= r; ++s)
                    lhs += xl * murphy_L_power(s, r, t, sg);
                HeckeElt rhs = xl * central_scalar(la, t, sg);
                if (!in_ideal_above(la, lhs - rhs))
                    rep.failures.push_back(
                        {"central congruence " + la.str() + " t=" +
                             std::to_string(t) + (sg == Sign::plus ? " +" : " -"),
                         lhs.str(), rhs.str()});
            }
        }
    }
    finish(rep, start);
    return rep;
}

// ---------------------------------------------------------------------------

namespace {

Multisegment random_multisegment(std::mt19937_64& rng, int max_total) {
    std::uniform_int_distribution<int> totdist(1, max_total);
    static const std::array<std::pair<long, long>, 6> pool{
        {{1, 1}, {-1, 1}, {2, 1}, {1, 2}, {3, 1}, {-2, 3}}};
    int remaining = totdist(rng);
    std::vector<Segment> segs;
    while (remaining > 0) {
        std::uniform_int_distribution<int> lendist(1, remaining);
        int len = lendist(rng);
        auto [num, den] = pool[rng() % pool.size()];
        std::uniform_int_distribution<int> expdist(-3, 3);
        int ea = expdist(rng), eq = expdist(rng);
        segs.push_back(Segment{Monomial(make_rat(num, den), ea, eq), len});
        remaining -= len;
    }
    return Multisegment(std::move(segs));
}

} // namespace

Report verify_drinfeld(int r_max, int n, std::uint64_t seed) {
    if (n <= r_max)
        throw std::domain_error("verify_drinfeld: requires n > r_max");
    auto start = Clock::now();
    Report rep;
    rep.suite = "drinfeld";
    rep.config = {{"r_max", std::to_string(r_max)},
                  {"n", std::to_string(n)},
                  {"seed", std::to_string(seed)}};

    auto fail = [&](const std::string& where, const std::string& lhs,
                    const std::string& rhs) {
        rep.failures.push_back({where, lhs, rhs});
    };

    for (int r = 0; r <= r_max; ++r) {
        for (const auto& la : partitions_of(r)) {
            // (a) recursion route and segment route agree
            ++rep.cases_checked;
            DrinfeldTuple rec = Q_from_lambda_recursion(la, n);
            DrinfeldTuple cor = Q_from_segments_cor(la, n);
            if (rec.polys != cor.polys) {
                fail("recursion vs segments " + la.str(), rec.polys[0].str(),
                     cor.polys[0].str());
                continue;
            }
            DrinfeldTuple Q = Q_from_lambda(la, n);

            // (b) product identity over the cells
            ++rep.cases_checked;
            auto [lhs, rhs] = product_identity(la, n);
            if (!(lhs == rhs))
                fail("product identity " + la.str(), lhs.str(), rhs.str());

            // (c) dominance and P recovery
            ++rep.cases_checked;
            if (!is_dominant(Q))
                fail("dominance " + la.str(), "not dominant", "dominant");
            else if (P_from_Q(Q) != P_from_lambda(la, n))
                fail("P recovery " + la.str(), "P_from_Q", "P_from_lambda");

            // (g) degrees add up to r
            ++rep.cases_checked;
            int degsum = 0;
            for (int d : Q.degrees())
                degsum += d;
            if (degsum != r)
                fail("degree sum " + la.str(), std::to_string(degsum),
                     std::to_string(r));

            if (r >= 1) {
                // (d) the segment map composed with the partial map
                ++rep.cases_checked;
                Multisegment s = s_lambda_a(la);
                DrinfeldTuple mapped = partial_map(s, n);
                if (!(mapped == Q))
                    fail("segment map " + la.str(), mapped.polys[0].str(),
                         Q.polys[0].str());

                // (e) the associated partition is the dual
                ++rep.cases_checked;
                if (!(multisegment_partition(s) == dual_partition(la)))
                    fail("dual partition " + la.str(),
                         multisegment_partition(s).str(),
                         dual_partition(la).str());
            }

            // central scalars against residue sums
            for (int t = 1; t <= 3; ++t)
                for (Sign sg : {Sign::plus, Sign::minus}) {
                    ++rep.cases_checked;
                    LaurentQA direct = central_scalar(la, t, sg);
                    LaurentQA viares;
                    for (int s = 1; s <= r; ++s)
                        viares += LaurentQA(
                            residue(la, s).pow(sg == Sign::plus ? t : -t));
                    if (!(direct == viares))
                        fail("central scalar " + la.str() + " t=" +
                                 std::to_string(t) +
                                 (sg == Sign::plus ? " +" : " -"),
                             direct.str(), viares.str());
                }
        }
    }
    finish(rep, start);
    return rep;
}

Report verify_roundtrip(int count, int max_total, int n, std::uint64_t seed) {
    if (n <= max_total)
        throw std::domain_error("verify_roundtrip: requires n > max_total");
    auto start = Clock::now();
    Report rep;
    rep.suite = "roundtrip";
    rep.config = {{"count", std::to_string(count)},
                  {"max_total", std::to_string(max_total)},
                  {"n", std::to_string(n)},
                  {"seed", std::to_string(seed)}};

    std::mt19937_64 rng(seed);
    for (int trial = 0; trial < count; ++trial) {
        ++rep.cases_checked;
        Multisegment s = random_multisegment(rng, max_total);
        Multisegment back = partial_inverse(partial_map(s, n));
        if (!(back == s))
            rep.failures.push_back(
                {"trial " + std::to_string(trial), back.str(), s.str()});
    }
    finish(rep, start);
    return rep;
}

// ---------------------------------------------------------------------------

nlohmann::ordered_json report_json(const Report& rep) {
    nlohmann::ordered_json j;
    j["suite"] = rep.suite;
    nlohmann::ordered_json cfg;
    for (const auto& [k, v] : rep.config)
        cfg[k] = v;
    j["config"] = std::move(cfg);
    j["cases"] = rep.cases_checked;
    nlohmann::ordered_json fails = nlohmann::ordered_json::array();
    for (const auto& f : rep.failures) {
        nlohmann::ordered_json jf;
        jf["case"] = f.where;
        jf["lhs"] = f.lhs;
        jf["rhs"] = f.rhs;
        fails.push_back(std::move(jf));
    }
    j["failures"] = std::move(fails);
    j["status"] = rep.status == SuiteStatus::pass
                      ? "pass"
                      : rep.status == SuiteStatus::fail ? "fail" : "report-only";
    j["elapsed_ms"] = rep.elapsed_ms;
    return j;
}

void print_report(const Report& rep, bool as_json, std::ostream& os) {
    if (as_json) {
        os << report_json(rep).dump(2) << "\n";
        return;
    }
    std::string status = rep.status == SuiteStatus::pass
                             ? "pass"
                             : rep.status == SuiteStatus::fail ? "FAIL"
                                                               : "report-only";
    os << "suite " << rep.suite << " [";
    for (std::size_t i = 0; i < rep.config.size(); ++i)
        os << (i ? ", " : "") << rep.config[i].first << "="
           << rep.config[i].second;
    os << "]: " << status << ", " << rep.cases_checked << " cases, "
       << rep.failures.size() << " failures (" << rep.elapsed_ms << " ms)\n";
    for (const auto& f : rep.failures) {
        os << "  case: " << f.where << "\n";
        os << "    lhs = " << f.lhs << "\n";
        os << "    rhs = " << f.rhs << "\n";
    }
}

} // namespace qschur
