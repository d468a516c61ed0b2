#pragma once

#include <atomic>
#include <cstdint>
#include <map>
#include <string>
#include <thread>
#include <vector>

#include "parityq/generate.hpp"
#include "parityq/global.hpp"
#include "parityq/json_io.hpp"
#include "parityq/mobius.hpp"
#include "parityq/sturm.hpp"

namespace parityq {

// ---------------------------------------------------------------------------
// Expected local data per table row (the harness checks computed values
// against these).
// ---------------------------------------------------------------------------
struct Table1Row {
    int n_E, n_JacEprime, n_JacC, kernel, mu, lambda, H;
};

inline Table1Row expected_case(int case_id) {
    switch (case_id) {
        case 1: return {2, 2, 4, 2, 1, -1, -1};
        case 2: return {2, 2, 2, 1, 1, -1, -1};
        case 3: return {2, 2, 1, 1, 1, +1, +1};
        case 4: return {2, 2, 1, 1, 1, +1, +1};
        case 5: return {1, 1, 1, 2, 1, -1, -1};
        default: return {1, 1, 1, 2, 1, -1, -1};
    }
}

struct Table2Row {
    long c_E, c_JacEprime, c_JacC;
    int mu, lambda, ww, H;
};

inline Table2Row expected_row(ReductionRow row, long n) {
    long ntil = (n % 2 == 0) ? 2 : 1;
    int sn = (n % 2 == 0) ? 1 : -1;  // (-1)^n
    switch (row) {
        case ReductionRow::Good: return {1, 1, 1, 1, +1, +1, +1};
        case ReductionRow::OneNPlus: return {1, 2 * n, n, 1, -1, -1, +1};
        case ReductionRow::OneNMinus: return {1, 2, ntil, 1, sn, +1, sn};
        case ReductionRow::InnPlusPlus: return {n, n, n * n, 1, +1, +1, +1};
        case ReductionRow::InnA: return {n, ntil, n, 1, -sn, -1, sn};
        case ReductionRow::InnB: return {ntil, n, n, 1, -sn, -1, sn};
        case ReductionRow::InnMinusMinus: return {ntil, ntil, ntil * ntil, 1, +1, +1, +1};
        default: throw Error("no table row for unsupported type");
    }
}

inline const std::vector<ReductionRow>& all_rows() {
    static const std::vector<ReductionRow> rows = {
        ReductionRow::Good,        ReductionRow::OneNPlus,  ReductionRow::OneNMinus,
        ReductionRow::InnPlusPlus, ReductionRow::InnA,      ReductionRow::InnB,
        ReductionRow::InnMinusMinus};
    return rows;
}

inline std::string row_tag(ReductionRow row) {
    switch (row) {
        case ReductionRow::Good: return "2";
        case ReductionRow::OneNPlus: return "1n+";
        case ReductionRow::OneNMinus: return "1n-";
        case ReductionRow::InnPlusPlus: return "Inn++";
        case ReductionRow::InnA: return "Inn+a";
        case ReductionRow::InnB: return "Inn+b";
        case ReductionRow::InnMinusMinus: return "Inn--";
        default: return "unsupported";
    }
}

inline ReductionRow parse_row_tag(const std::string& s) {
    for (ReductionRow r : all_rows())
        if (row_tag(r) == s) return r;
    throw ParseError("unknown reduction row '" + s + "'", 0);
}

// Replayable literal accepted by the cubic parser.
inline std::string cubic_literal(const RationalCubic& f) {
    auto lin = [](const Rational& r) {
        return r.sign() >= 0 ? "(x-" + r.str() + ")" : "(x+" + (-r).str() + ")";
    };
    auto signed_term = [](const Rational& r) {
        return r.sign() >= 0 ? "+" + r.str() : "-" + (-r).str();
    };
    if (f.root_data() && f.root_data()->split()) {
        const auto& r = f.root_data()->roots;
        return lin(r[0]) + lin(r[1]) + lin(r[2]);
    }
    if (f.root_data() && f.root_data()->quad) {
        const auto& q = *f.root_data()->quad;
        std::string s = lin(f.root_data()->roots[0]) + "(x^2";
        Rational u = -q.sum;
        if (!u.is_zero()) s += signed_term(u) + "x";
        s += signed_term(q.prod) + ")";
        return s;
    }
    return f.a().str() + "," + f.b().str() + "," + f.c().str();
}

// ---------------------------------------------------------------------------
// Harness plumbing.
// ---------------------------------------------------------------------------
struct VerifyConfig {
    std::string check = "identity";
    std::uint64_t seed = 1;
    long count = 100;
    long height = 50;
    int force_case = 0;      // 1..6, or 0 for none
    std::string force_type;  // row tag, or empty
    int workers = 1;
    bool json = false;
};

struct TaskOutcome {
    bool ok = true;
    std::vector<std::string> tallies;
    std::string failure;
};

struct VerifySummary {
    long checked = 0;
    long failures = 0;
    std::map<std::string, long> tallies;
    std::vector<std::string> failure_lines;
};

// Index-addressed work; per-index substreams make the result independent of
// the worker count.
template <class Fn>
inline std::vector<TaskOutcome> parallel_map(long count, int workers, Fn fn) {
    std::vector<TaskOutcome> out((std::size_t)count);
    if (workers <= 1) {
        for (long i = 0; i < count; ++i) out[(std::size_t)i] = fn(i);
        return out;
    }
    std::atomic<long> next{0};
    auto worker = [&] {
        for (;;) {
            long i = next.fetch_add(1);
            if (i >= count) return;
            out[(std::size_t)i] = fn(i);
        }
    };
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    return out;
}

namespace checks {

inline long pick_prime(long i) {
    static const long ps[3] = {5, 7, 17};
    return ps[i % 3];
}

inline std::string fail_line(const RationalCubic& f, const Place& v, const std::string& why) {
    return "local \"" + cubic_literal(f) + "\" --place " + v.str() + "   # " + why;
}

// Local identity at the real and complex places and every supported odd
// relevant place.
inline TaskOutcome identity_task(long i, const VerifyConfig& cfg) {
    Rng rng = Rng(cfg.seed).fork((std::uint64_t)i);
    RationalCubic f = [&]() -> RationalCubic {
        switch (i % 5) {
            case 0: return rand_integral_cubic(rng, cfg.height);
            case 1: return rand_split_cubic(rng, cfg.height);
            case 2: {
                ReductionRow row = all_rows()[(std::size_t)((i / 5) % 7)];
                long n = (i / 35) % 4 + 1;
                Int p(pick_prime(i));
                return rand_table2_instance(rng, p, row, n, pick_flavor(rng, row, n));
            }
            case 3: return rand_real_case(rng, (int)((i / 5) % 6) + 1, cfg.height);
            default: return rand_real_case(rng, 5 + (int)(i % 2), cfg.height);
        }
    }();
    TaskOutcome t;
    LocalParityReport rr = local_report(f, Place::real());
    t.tallies.push_back("real/case" + std::to_string(rr.real_data->case_id));
    if (!*rr.identity_holds) {
        t.ok = false;
        t.failure = fail_line(f, Place::real(), "identity fails");
        return t;
    }
    LocalParityReport rc = local_report(f, Place::complex());
    if (!*rc.identity_holds) {
        t.ok = false;
        t.failure = fail_line(f, Place::complex(), "identity fails");
        return t;
    }
    RationalCubic fi = integralize(f).first;
    for (const Place& v : relevant_places(fi)) {
        if (!v.is_padic() || v.p() == 2) continue;
        LocalParityReport rep = local_report(fi, v);
        if (!rep.supported) {
            t.tallies.push_back("p-adic/unsupported");
            continue;
        }
        t.tallies.push_back("p-adic/" + row_tag(rep.padic_data->type.row));
        if (!*rep.identity_holds) {
            t.ok = false;
            t.failure = fail_line(fi, v, "identity fails");
            return t;
        }
    }
    return t;
}

inline TaskOutcome product_H_task(long i, const VerifyConfig& cfg) {
    Rng rng = Rng(cfg.seed).fork((std::uint64_t)i);
    RationalCubic f =
        (i % 3 == 0) ? rand_split_cubic(rng, cfg.height) : rand_integral_cubic(rng, cfg.height);
    TaskOutcome t;
    t.tallies.push_back("product-H");
    if (global_product_H(f).first != 1) {
        t.ok = false;
        t.failure = "global \"" + cubic_literal(f) + "\"   # product of H != 1";
    }
    return t;
}

inline TaskOutcome scaling_task(long i, const VerifyConfig& cfg) {
    Rng rng = Rng(cfg.seed).fork((std::uint64_t)i);
    RationalCubic f =
        (i % 2 == 0) ? rand_integral_cubic(rng, cfg.height) : rand_split_cubic(rng, cfg.height);
    Rational d = (i % 3 == 0) ? Rational(Int(rng.nonzero(-9, 9))) : rand_rational(rng, 9, 6);
    Rational d2 = d * d;
    RationalCubic g(f.a() * d2, f.b() * d2 * d2, f.c() * d2 * d2 * d2);
    TaskOutcome t;
    t.tallies.push_back("scaling");
    std::set<Place> places;
    for (const Place& v : relevant_places(integralize(f).first)) places.insert(v);
    for (const Place& v : relevant_places(integralize(g).first)) places.insert(v);
    for (const Place& v : places) {
        if (error_term_H(f, v) != error_term_H(g, v)) {
            t.ok = false;
            t.failure = fail_line(f, v, "H changed under scaling d = " + d.str());
            return t;
        }
    }
    return t;
}

inline TaskOutcome continuity_task(long i, const VerifyConfig& cfg) {
    Rng rng = Rng(cfg.seed).fork((std::uint64_t)i);
    Int p(pick_prime(i));
    ReductionRow row = all_rows()[(std::size_t)((i / 3) % 7)];
    long n = (i / 21) % 4 + 1;
    RationalCubic f = rand_table2_instance(rng, p, row, n, pick_flavor(rng, row, n));
    long N = continuity_radius(f, p);
    RationalCubic g = perturb_congruent(rng, f, p, N);
    TaskOutcome t;
    t.tallies.push_back("continuity/" + row_tag(row));
    Place v = Place::padic(p);
    for (auto [x, y] : {std::pair{f.a(), g.a()}, {f.b(), g.b()}, {f.c(), g.c()}}) {
        Rational diff = x - y;
        if (!diff.is_zero() && valuation(diff, p) < N) {
            t.ok = false;
            t.failure = fail_line(f, v, "perturbation not congruent mod p^N");
            return t;
        }
    }
    LocalParityReport a = local_report(f, v);
    LocalParityReport b = local_report(g, v);
    bool same = a.supported && b.supported && a.H == b.H && *a.lambda == *b.lambda &&
                *a.w_E == *b.w_E && *a.w_JacEprime == *b.w_JacEprime;
    if (!same) {
        t.ok = false;
        t.failure = fail_line(g, v, "local data moved inside the congruence radius");
    }
    return t;
}

inline TaskOutcome sturm_task(long i, const VerifyConfig& cfg) {
    Rng rng = Rng(cfg.seed).fork((std::uint64_t)i);
    TaskOutcome t;
    switch (i % 3) {
        case 0: {  // root counts against the explicit list
            t.tallies.push_back("sturm/count");
            int deg = rng.coin() ? 3 : 4;
            auto roots = rand_distinct_roots(rng, deg, cfg.height, true);
            UniPoly f = poly_from_roots(roots);
            Rational a{Int(rng.range(-cfg.height, cfg.height)), Int(rng.range(1, 3))};
            Rational b = a + Rational(Int(rng.range(0, 2 * cfg.height)), Int(rng.range(1, 3)));
            auto in_interval = [&](const SturmPoint& lo, const SturmPoint& hi) {
                long c = 0;
                for (const auto& r : roots) {
                    bool above = lo.inf == -1 || (lo.inf == 0 && r > lo.x);
                    bool below = hi.inf == +1 || (hi.inf == 0 && r <= hi.x);
                    if (above && below) ++c;
                }
                return c;
            };
            struct IV { SturmPoint lo, hi; };
            IV ivs[3] = {{SturmPoint::neg_inf(), SturmPoint::pos_inf()},
                         {SturmPoint::at(Rational(0)), SturmPoint::pos_inf()},
                         {SturmPoint::at(a), SturmPoint::at(b)}};
            for (const auto& iv : ivs) {
                if (count_roots(f, iv.lo, iv.hi) != in_interval(iv.lo, iv.hi)) {
                    t.ok = false;
                    t.failure = "sturm \"" + f.str() + "\"   # root count mismatch";
                    return t;
                }
            }
            return t;
        }
        case 1: {  // chain product equals the cubic error term
            t.tallies.push_back("sturm/cubic-consistency");
            for (;;) {
                RationalCubic f = rand_integral_cubic(rng, cfg.height);
                if (f.b().is_zero() || f.L().is_zero()) continue;
                if (sturm_sequence(f.poly()).degenerate) continue;
                if (!cubic_consistency(f)) {
                    t.ok = false;
                    t.failure = "sturm \"" + f.str() + "\"   # chain product != error term";
                }
                return t;
            }
        }
        default: {  // product formula for the chain product
            t.tallies.push_back("sturm/product");
            for (;;) {
                auto roots = rand_distinct_roots(rng, 4, 12, false);
                UniPoly f = poly_from_roots(roots);
                if (sturm_sequence(f).degenerate) continue;
                if (generalized_product_check(f) != 1) {
                    t.ok = false;
                    t.failure = "sturm \"" + f.str() + "\"   # chain product formula fails";
                }
                return t;
            }
        }
    }
}

// Exact identities for a validated matching: the global polynomial identity
// and the branch model.
inline bool mobius_identities_ok(const MobiusMatch& m, const RationalCubic& g1,
                                 const RationalCubic& g2) {
    UniPoly N = mobius_numerator(m, g2);
    Rational prod_acai(1);
    for (const auto& a : m.alphas) prod_acai *= (m.A - m.C * a);
    if (prod_acai * N != (m.A * m.D - m.B * m.C).pow(3) * g1.poly()) return false;
    NormalForm nf = normal_form(m, g1);
    switch (nf.branch) {
        case MobiusBranch::General: {
            Rational ca = m.C / m.A;
            UniPoly W({Rational(1), -ca});  // w = 1 - (C/A) x = (A - Cx)/A
            UniPoly lhs = (nf.d * (m.A * m.D - m.B * m.C)) *
                          (W * nf.f_new->poly().compose_linear(-ca, Rational(1)));
            UniPoly rhs = prod_acai * (UniPoly({m.A, -m.C}) * g1.poly());
            return lhs == rhs;
        }
        case MobiusBranch::QuadraticTwist: {
            UniPoly lhs = g2.poly().compose_linear(m.D / m.A, -(m.B / m.A));
            return lhs == nf.d * g1.poly();
        }
        case MobiusBranch::XfForm: {
            Rational prod_roots = m.alphas[0] * m.alphas[1] * m.alphas[2];
            return prod_roots * N == m.B.pow(3) * g1.poly();
        }
    }
    return false;
}

inline RootTriple sorted_roots(const RationalCubic& f) {
    const auto& r = f.root_data()->roots;
    return RootTriple{r[0], r[1], r[2]};
}

inline TaskOutcome mobius_task(long i, const VerifyConfig& cfg) {
    Rng rng = Rng(cfg.seed).fork((std::uint64_t)i);
    TaskOutcome t;
    long mode = i % 4;
    for (;;) {
        RationalCubic f = rand_split_cubic(rng, 12);
        RootTriple alphas = sorted_roots(f);
        RootTriple betas;
        if (mode == 0) {  // partner family with shared 2-torsion
            Rational g{Int(rng.range(-6, 6)), Int(rng.range(1, 3))};
            if (f.eval(-g).is_zero()) continue;
            betas = shifted_partner_roots(alphas, g);
            if (betas[0] == betas[1] || betas[0] == betas[2] || betas[1] == betas[2]) continue;
            t.tallies.push_back("mobius/shift");
        } else if (mode == 1) {  // translation: quadratic twist branch
            Rational s{Int(rng.nonzero(-9, 9))};
            bool bad = false;
            for (int k = 0; k < 3; ++k) {
                betas[(std::size_t)k] = alphas[(std::size_t)k] + s;
                bad = bad || betas[(std::size_t)k].is_zero();
            }
            if (bad) continue;
            t.tallies.push_back("mobius/translation");
        } else if (mode == 2) {  // planted A = 0
            Rational b1{Int(rng.nonzero(-9, 9))};
            Rational b2{Int(rng.nonzero(-9, 9))};
            if (b1 == b2) continue;
            const Rational &a1 = alphas[0], &a2 = alphas[1], &a3 = alphas[2];
            Rational den = a3 * (a1 - a2);
            Rational b3 = -(b1 * a1 * (a2 - a3) + b2 * a2 * (a3 - a1)) / den;
            if (b3.is_zero() || b3 == b1 || b3 == b2) continue;
            betas = RootTriple{b1, b2, b3};
            t.tallies.push_back("mobius/xf");
        } else {  // identity matching
            betas = alphas;
            t.tallies.push_back("mobius/identity");
        }
        RationalCubic g2 = RationalCubic::from_roots(betas[0], betas[1], betas[2]);
        MobiusMatch m = mobius_match(alphas, betas);
        t.tallies.push_back("mobius/branch/" + branch_name(m.branch));
        bool ok = true;
        for (int k = 0; k < 3; ++k)
            ok = ok && m.apply(alphas[(std::size_t)k]) == betas[(std::size_t)k];
        ok = ok && mobius_identities_ok(m, f, g2);
        if (!ok) {
            t.ok = false;
            t.failure = "mobius \"" + cubic_literal(f) + "\" \"" + cubic_literal(g2) +
                        "\"   # matching identity fails";
        }
        return t;
    }
}

inline TaskOutcome table1_task(long i, const VerifyConfig& cfg) {
    Rng rng = Rng(cfg.seed).fork((std::uint64_t)i);
    int case_id = cfg.force_case;
    RationalCubic f = rand_real_case(rng, case_id, cfg.height);
    TaskOutcome t;
    t.tallies.push_back("real/case" + std::to_string(case_id));
    LocalParityReport rep = local_report(f, Place::real());
    Table1Row want = expected_case(case_id);
    const RealLocalData& d = *rep.real_data;
    bool ok = d.case_id == case_id && d.n_E == want.n_E && d.n_JacEprime == want.n_JacEprime &&
              d.n_JacC == want.n_JacC && d.kernel_identity == want.kernel && d.mu == want.mu &&
              *rep.lambda == want.lambda && rep.H == want.H && *rep.identity_holds &&
              *rep.lambda * rep.H == rep.ww();
    if (!ok) {
        t.ok = false;
        t.failure = fail_line(f, Place::real(), "table data mismatch for case " +
                                                    std::to_string(case_id));
    }
    return t;
}

inline TaskOutcome table2_task(long i, const VerifyConfig& cfg) {
    Rng rng = Rng(cfg.seed).fork((std::uint64_t)i);
    ReductionRow row = parse_row_tag(cfg.force_type);
    Int p(pick_prime(i));
    long n = (i / 3) % 4 + 1;
    RationalCubic f = rand_table2_instance(rng, p, row, n, pick_flavor(rng, row, n));
    TaskOutcome t;
    t.tallies.push_back("p-adic/" + row_tag(row));
    Place v = Place::padic(p);
    LocalParityReport rep = local_report(f, v);
    if (!rep.supported) {
        t.ok = false;
        t.failure = fail_line(f, v, "constructed instance not classified");
        return t;
    }
    const PadicLocalData& d = *rep.padic_data;
    Table2Row want = expected_row(row, (row == ReductionRow::Good) ? 0 : n);
    bool ok = d.type.row == row && (row == ReductionRow::Good || d.type.n == n) &&
              d.c_E == want.c_E && d.c_JacEprime == want.c_JacEprime && d.c_JacC == want.c_JacC &&
              d.mu == want.mu && *rep.lambda == want.lambda && rep.ww() == want.ww &&
              rep.H == want.H && *rep.identity_holds;
    if (!ok) {
        t.ok = false;
        t.failure = fail_line(f, v, "table data mismatch for row " + row_tag(row));
    }
    return t;
}

}  // namespace checks

inline VerifySummary run_verify(const VerifyConfig& cfg) {
    using Task = TaskOutcome (*)(long, const VerifyConfig&);
    Task task_fn = nullptr;
    if (cfg.force_case != 0) {
        if (cfg.force_case < 1 || cfg.force_case > 6) throw ParseError("force-case must be 1..6", 0);
        task_fn = checks::table1_task;
    } else if (!cfg.force_type.empty()) {
        parse_row_tag(cfg.force_type);  // validate before fanning out
        task_fn = checks::table2_task;
    } else if (cfg.check == "identity") {
        task_fn = checks::identity_task;
    } else if (cfg.check == "product-H") {
        task_fn = checks::product_H_task;
    } else if (cfg.check == "scaling") {
        task_fn = checks::scaling_task;
    } else if (cfg.check == "continuity") {
        task_fn = checks::continuity_task;
    } else if (cfg.check == "sturm-consistency") {
        task_fn = checks::sturm_task;
    } else if (cfg.check == "mobius") {
        task_fn = checks::mobius_task;
    } else {
        throw ParseError("unknown check '" + cfg.check + "'", 0);
    }
    auto task = [&](long i) -> TaskOutcome {
        try {
            return task_fn(i, cfg);
        } catch (const std::exception& e) {
            TaskOutcome t;
            t.ok = false;
            t.failure = std::string("# task ") + std::to_string(i) + " raised: " + e.what();
            return t;
        }
    };
    std::vector<TaskOutcome> outcomes = parallel_map(cfg.count, cfg.workers, task);
    VerifySummary s;
    s.checked = cfg.count;
    for (const auto& o : outcomes) {
        if (!o.ok) {
            ++s.failures;
            s.failure_lines.push_back(o.failure);
        }
        for (const auto& k : o.tallies) ++s.tallies[k];
    }
    return s;
}

inline std::string verify_text(const VerifyConfig& cfg, const VerifySummary& s) {
    std::string out;
    out += "check: ";
    out += cfg.force_case ? ("force-case " + std::to_string(cfg.force_case))
                          : (!cfg.force_type.empty() ? ("force-type " + cfg.force_type)
                                                     : cfg.check);
    out += "\nseed: " + std::to_string(cfg.seed) + "  count: " + std::to_string(cfg.count) +
           "  height: " + std::to_string(cfg.height) + "\n";
    out += "checked: " + std::to_string(s.checked) + "\n";
    out += "failures: " + std::to_string(s.failures) + "\n";
    out += "tallies:\n";
    for (const auto& [k, v] : s.tallies) out += "  " + k + ": " + std::to_string(v) + "\n";
    for (const auto& line : s.failure_lines) out += "FAIL " + line + "\n";
    return out;
}

inline Json verify_json(const VerifyConfig& cfg, const VerifySummary& s) {
    Json j;
    j["check"] = cfg.force_case ? ("force-case " + std::to_string(cfg.force_case))
                                : (!cfg.force_type.empty() ? ("force-type " + cfg.force_type)
                                                           : cfg.check);
    j["seed"] = cfg.seed;
    j["count"] = cfg.count;
    j["height"] = cfg.height;
    j["checked"] = s.checked;
    j["failures"] = s.failures;
    Json tallies;
    for (const auto& [k, v] : s.tallies) tallies[k] = v;
    j["tallies"] = tallies;
    Json fails = Json::array();
    for (const auto& line : s.failure_lines) fails.push_back(line);
    j["failure_lines"] = fails;
    return j;
}

}  // namespace parityq
