#pragma once

#include <atomic>
#include <chrono>
#include <functional>
#include <thread>
#include <vector>

#include "ekr/corpus.hpp"
#include "ekr/homology.hpp"
#include "ekr/intersecting.hpp"
#include "ekr/report.hpp"
#include "ekr/shift.hpp"

namespace ekr {

struct CampaignConfig {
    std::uint64_t prime = 2147483647ULL;
    std::uint64_t seed = 0;
    /// Second prime for homology-only claims in corpus mode; 0 disables.
    std::uint64_t cross_prime = 2;
    SearchBudget budget;
    int workers = 0; // 0 = pick automatically

    ShiftConfig shift(std::uint64_t p) const {
        ShiftConfig cfg;
        cfg.prime = p;
        cfg.seed = seed;
        return cfg;
    }
};

struct ClaimOutcome {
    std::string verdict; // "pass" | "fail" | "skipped"
    std::string reason;
    std::optional<int> r;
    std::optional<int> t;
    json witness;
};

struct ClaimDef {
    std::string id;
    std::string title;
    bool wants_graph = false;
    bool wants_pair = false;
    bool wants_coned = false;
    bool wants_parts = false;
    /// Whether re-running at the cross-check prime is meaningful (claims
    /// whose evaluation is homology-dependent but shifting-free).
    bool cross_prime_ok = false;
    std::function<std::vector<ClaimOutcome>(const Instance&, std::uint64_t prime, const CampaignConfig&)> run;
};

namespace claims {

inline ClaimOutcome pass(std::optional<int> r = std::nullopt) {
    return {"pass", "", r, std::nullopt, json()};
}
inline ClaimOutcome fail(json witness, std::optional<int> r = std::nullopt) {
    return {"fail", "", r, std::nullopt, std::move(witness)};
}
inline std::vector<ClaimOutcome> skip(std::string reason) {
    return {{"skipped", std::move(reason), std::nullopt, std::nullopt, json()}};
}

inline bool near_cone(const SimplicialComplex& cx) {
    return !cx.is_void() && !near_cone_apexes(cx).empty();
}

/// r-EKR verdicts for r = 1..rmax, one outcome per r.
inline std::vector<ClaimOutcome> ekr_sweep(const SimplicialComplex& cx, int rmax,
                                           const CampaignConfig& cfg) {
    rmax = std::min(rmax, max_facet_card(cx));
    if (rmax < 1) return skip("no feasible r");
    std::vector<ClaimOutcome> out;
    for (int r = 1; r <= rmax; ++r) {
        EkrVerdict v = is_r_ekr(cx, r, 1, cfg.budget);
        if (v.is_ekr) {
            out.push_back(pass(r));
        } else {
            out.push_back(fail(json{{"max_family_size", v.max_family_size},
                                    {"star_bound", v.star_bound},
                                    {"family", to_json(v.witness.members)}},
                               r));
        }
    }
    return out;
}

} // namespace claims

/// All verifiable claims.  Ids follow the harness convention used in the
/// reports; each claim documents its hypothesis filter via skip reasons.
inline const std::vector<ClaimDef>& claim_registry() {
    static const std::vector<ClaimDef> defs = [] {
        using namespace claims;
        std::vector<ClaimDef> v;

        v.push_back({"ekr-probe", "report whether the instance is r-EKR for every feasible r",
                     false, false, false, false, false,
                     [](const Instance& inst, std::uint64_t, const CampaignConfig& cfg) {
                         if (inst.complex.is_void() || inst.complex.is_empty()) return skip("no nonempty faces");
                         return ekr_sweep(inst.complex, max_facet_card(inst.complex), cfg);
                     }});

        v.push_back({"thm-3.3", "near-cones are r-EKR for r <= (depth+1)/2",
                     false, false, false, false, true,
                     [](const Instance& inst, std::uint64_t p, const CampaignConfig& cfg) {
                         if (inst.complex.is_void() || inst.complex.is_empty()) return skip("degenerate complex");
                         if (!near_cone(inst.complex)) return skip("not a near-cone");
                         int d = depth(inst.complex, p, DepthMethod::links).depth;
                         return ekr_sweep(inst.complex, (d + 1) / 2, cfg);
                     }});

        v.push_back({"cor-3.4", "sequentially CM near-cones are r-EKR for r <= k/2",
                     false, false, false, false, true,
                     [](const Instance& inst, std::uint64_t p, const CampaignConfig& cfg) {
                         if (inst.complex.is_void() || inst.complex.is_empty()) return skip("degenerate complex");
                         if (!near_cone(inst.complex)) return skip("not a near-cone");
                         if (!is_sequentially_cm(inst.complex, p)) return skip("not sequentially CM");
                         return ekr_sweep(inst.complex, min_facet_card(inst.complex) / 2, cfg);
                     }});

        v.push_back({"thm-4.1", "sequentially CM graphs with an isolated vertex are r-EKR for r <= k/2",
                     true, false, false, false, true,
                     [](const Instance& inst, std::uint64_t p, const CampaignConfig& cfg) {
                         const Graph& g = *inst.graph;
                         bool iso = false;
                         for (int u = 1; u <= g.vertex_count() && !iso; ++u) iso = g.degree(u) == 0;
                         if (!iso) return skip("no isolated vertex");
                         if (!is_sequentially_cm(inst.complex, p)) return skip("not sequentially CM");
                         return ekr_sweep(inst.complex, min_facet_card(inst.complex) / 2, cfg);
                     }});

        v.push_back({"lemma-3.1", "shifted complexes are r-EKR for r <= k/2",
                     false, false, false, false, false,
                     [](const Instance& inst, std::uint64_t, const CampaignConfig& cfg) {
                         if (inst.complex.is_void() || inst.complex.is_empty()) return skip("degenerate complex");
                         if (!is_shifted(inst.complex)) return skip("not shifted");
                         return ekr_sweep(inst.complex, min_facet_card(inst.complex) / 2, cfg);
                     }});

        v.push_back({"prop-4.5", "a disjoint union of n >= 2r nonempty graphs with an isolated vertex is r-EKR",
                     true, false, false, true, false,
                     [](const Instance& inst, std::uint64_t, const CampaignConfig& cfg) {
                         return ekr_sweep(inst.complex, inst.parts_nm->first / 2, cfg);
                     }});

        v.push_back({"prop-4.8", "with m parts meeting the depth-1 criterion, r-EKR for r <= (n+m)/2",
                     true, false, false, true, false,
                     [](const Instance& inst, std::uint64_t, const CampaignConfig& cfg) {
                         auto [nparts, m] = *inst.parts_nm;
                         return ekr_sweep(inst.complex, (nparts + m) / 2, cfg);
                     }});

        v.push_back({"lemma-4.6", "depth I(G) >= 1 iff |G| > 1 and the complement is connected",
                     true, false, false, false, true,
                     [](const Instance& inst, std::uint64_t p, const CampaignConfig&) -> std::vector<ClaimOutcome> {
                         const Graph& g = *inst.graph;
                         bool lhs = g.vertex_count() > 1 && is_connected(complement(g));
                         int d = depth(inst.complex, p, DepthMethod::links).depth;
                         if (lhs == (d >= 1)) return {pass()};
                         return {fail(json{{"criterion", lhs}, {"depth", d}})};
                     }});

        v.push_back({"duval-2.12", "depth via link homology equals depth via shifting",
                     false, false, false, false, false,
                     [](const Instance& inst, std::uint64_t p, const CampaignConfig& cfg) -> std::vector<ClaimOutcome> {
                         if (inst.complex.is_void()) return skip("void complex");
                         int dl = depth(inst.complex, p, DepthMethod::links).depth;
                         int ds = depth(inst.complex, p, DepthMethod::shift, cfg.shift(p)).depth;
                         if (dl == ds) return {pass()};
                         return {fail(json{{"links", dl}, {"shift", ds}})};
                     }});

        v.push_back({"lemma-2.8", "the shift of a near-cone is the cone over the shifted link plus facets avoiding v1",
                     false, false, false, false, false,
                     [](const Instance& inst, std::uint64_t p, const CampaignConfig& cfg) -> std::vector<ClaimOutcome> {
                         if (inst.complex.is_void() || inst.complex.is_empty()) return skip("degenerate complex");
                         auto apexes = near_cone_apexes(inst.complex);
                         if (apexes.empty()) return skip("not a near-cone");
                         NevoReport rep = check_nevo(inst.complex, apexes.front(), cfg.shift(p));
                         if (rep.ok()) return {pass()};
                         json w{{"link_match", rep.link_match},
                                {"remainder_ok", rep.remainder_ok},
                                {"link_fvector_match", rep.link_fvector_match}};
                         if (rep.offender) w["offender"] = to_json(*rep.offender);
                         return {fail(w)};
                     }});

        v.push_back({"lemma-2.11", "the shift is pure exactly for Cohen-Macaulay complexes",
                     false, false, false, false, false,
                     [](const Instance& inst, std::uint64_t p, const CampaignConfig& cfg) -> std::vector<ClaimOutcome> {
                         if (inst.complex.is_void() || inst.complex.is_empty()) return skip("degenerate complex");
                         bool cm = is_cohen_macaulay(inst.complex, p).cohen_macaulay;
                         bool pure = is_pure(exterior_shift(inst.complex, cfg.shift(p)).shifted);
                         if (cm == pure) return {pass()};
                         return {fail(json{{"cohen_macaulay", cm}, {"shift_pure", pure}})};
                     }});

        v.push_back({"lemma-2.13", "depth of a join is the sum of the depths plus one",
                     false, true, false, false, false,
                     [](const Instance& inst, std::uint64_t p, const CampaignConfig& cfg) -> std::vector<ClaimOutcome> {
                         ShiftConfig sc = cfg.shift(p);
                         int da = depth(inst.complex, p, DepthMethod::shift, sc).depth;
                         int db = depth(*inst.second, p, DepthMethod::shift, sc).depth;
                         int dj = depth(join(inst.complex, *inst.second), p, DepthMethod::shift, sc).depth;
                         if (dj == da + db + 1) return {pass()};
                         return {fail(json{{"first", da}, {"second", db}, {"join", dj}})};
                     }});

        v.push_back({"eagon-reiner", "the shifted independence complex is flag iff the graph is co-chordal iff the dual is CM",
                     true, false, false, false, false,
                     [](const Instance& inst, std::uint64_t p, const CampaignConfig& cfg) -> std::vector<ClaimOutcome> {
                         const Graph& g = *inst.graph;
                         bool flag = is_flag(exterior_shift(inst.complex, cfg.shift(p)).shifted);
                         bool cochordal = is_cochordal(g);
                         SimplicialComplex dual = alexander_dual(inst.complex);
                         // The dual of a full simplex is VOID and has no CM
                         // test; the remaining two legs still apply.
                         std::optional<bool> dual_cm;
                         if (!dual.is_void()) dual_cm = is_cohen_macaulay(dual, p).cohen_macaulay;
                         bool ok = flag == cochordal && (!dual_cm || *dual_cm == cochordal);
                         if (ok) return {pass()};
                         json w{{"shift_flag", flag}, {"cochordal", cochordal}};
                         if (dual_cm) w["dual_cm"] = *dual_cm;
                         return {fail(w)};
                     }});

        v.push_back({"hilton-milner", "simplexes are strictly r-EKR for 2 <= r < n/2",
                     false, false, false, false, false,
                     [](const Instance& inst, std::uint64_t, const CampaignConfig& cfg) -> std::vector<ClaimOutcome> {
                         const SimplicialComplex& cx = inst.complex;
                         if (cx.is_void() || cx != SimplicialComplex::simplex(cx.vertex_count()))
                             return skip("not a simplex");
                         int n = cx.vertex_count();
                         std::vector<ClaimOutcome> out;
                         for (int r = 2; 2 * r < n; ++r) {
                             StrictVerdict sv = is_strict_r_ekr(cx, r, cfg.budget);
                             if (sv.strict) {
                                 out.push_back(pass(r));
                             } else {
                                 out.push_back(fail(json{{"optimum", sv.optimum},
                                                         {"nonstar", to_json(sv.nonstar_witness->members)}},
                                                    r));
                             }
                         }
                         if (out.empty()) return skip("no r with 2 <= r < n/2");
                         return out;
                     }});

        v.push_back({"example-5.3", "coned-boundary closed forms match direct counts and the star always wins",
                     false, false, true, false, false,
                     [](const Instance& inst, std::uint64_t, const CampaignConfig&) {
                         auto [n, k] = *inst.coned;
                         std::vector<ClaimOutcome> out;
                         for (int r = n; 2 * r <= n + k; ++r) {
                             ConedCounts c = coned_boundary_counts(n, k, r);
                             bool ok = c.star > c.family && (!c.star_direct || c.verified);
                             if (ok) {
                                 out.push_back(pass(r));
                             } else {
                                 json w{{"star", c.star}, {"family", c.family}};
                                 if (c.star_direct) w["star_direct"] = *c.star_direct;
                                 if (c.family_direct) w["family_direct"] = *c.family_direct;
                                 out.push_back(fail(w, r));
                             }
                         }
                         return out;
                     }});

        v.push_back({"example-5.4-cycles", "independence complexes of cycles are r-EKR for every feasible r",
                     true, false, false, false, false,
                     [](const Instance& inst, std::uint64_t, const CampaignConfig& cfg) {
                         return ekr_sweep(inst.complex, max_facet_card(inst.complex), cfg);
                     }});

        v.push_back({"chvatal-remark", "the best vertex star is a maximum intersecting family of mixed faces",
                     false, false, false, false, false,
                     [](const Instance& inst, std::uint64_t, const CampaignConfig& cfg) -> std::vector<ClaimOutcome> {
                         if (inst.complex.is_void() || inst.complex.is_empty()) return skip("no nonempty faces");
                         ChvatalVerdict cv = chvatal_check(inst.complex, cfg.budget);
                         if (cv.holds) return {pass()};
                         return {fail(json{{"max_family", cv.max_family},
                                           {"star", cv.star},
                                           {"family", to_json(cv.witness)}})};
                     }});

        return v;
    }();
    return defs;
}

inline const ClaimDef* find_claim(const std::string& id) {
    for (const ClaimDef& c : claim_registry())
        if (c.id == id) return &c;
    return nullptr;
}

struct CampaignTally {
    long long pass = 0, fail = 0, skipped = 0, resumed = 0;
};

/// Evaluates one claim over a corpus.  Instances run on a bounded worker
/// pool; records are emitted in canonical instance order.  Instances whose
/// records are already in the log are not recomputed.
inline CampaignTally run_campaign(const ClaimDef& claim, const std::vector<Instance>& instances,
                                  const CampaignConfig& cfg,
                                  const std::function<void(const VerificationReport&)>& sink,
                                  const JsonlLog* resume_log = nullptr) {
    for (const Instance& inst : instances) {
        if ((claim.wants_graph && !inst.graph) || (claim.wants_pair && !inst.second) ||
            (claim.wants_coned && !inst.coned) || (claim.wants_parts && !inst.parts_nm))
            throw input_error("claim '" + claim.id + "' needs a corpus providing " +
                              (claim.wants_graph ? "graphs" : claim.wants_pair ? "complex pairs"
                               : claim.wants_coned ? "coned boundaries" : "disjoint unions") +
                              " (instance " + inst.source + ")");
    }

    std::vector<std::uint64_t> primes{cfg.prime};
    if (claim.cross_prime_ok && cfg.cross_prime != 0 && cfg.cross_prime != cfg.prime)
        primes.push_back(cfg.cross_prime);

    struct Slot {
        std::vector<VerificationReport> reports;
        bool resumed = false;
    };
    std::vector<Slot> slots(instances.size());

    auto evaluate = [&](std::size_t idx) {
        const Instance& inst = instances[idx];
        Slot& slot = slots[idx];
        for (std::uint64_t p : primes) {
            VerificationReport base;
            base.claim = claim.id;
            base.instance_digest = inst.digest_str();
            base.instance_source = inst.source;
            base.instance_data = inst.data();
            base.prime = p;
            base.seed = cfg.seed;
            if (resume_log && resume_log->has_instance(base.instance_key())) {
                slot.resumed = true;
                continue;
            }
            auto t0 = std::chrono::steady_clock::now();
            std::vector<ClaimOutcome> outcomes;
            try {
                outcomes = claim.run(inst, p, cfg);
            } catch (const resource_error& e) {
                outcomes = claims::skip(std::string("resource: ") + e.what());
            } catch (const genericity_error& e) {
                outcomes = claims::skip(std::string("genericity: ") + e.what());
            }
            long long ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                               std::chrono::steady_clock::now() - t0)
                               .count();
            for (const ClaimOutcome& oc : outcomes) {
                VerificationReport rep = base;
                rep.r = oc.r;
                rep.t = oc.t;
                rep.verdict = oc.verdict;
                rep.reason = oc.reason;
                rep.witness = oc.witness;
                rep.runtime_ms = ms;
                slot.reports.push_back(std::move(rep));
            }
        }
    };

    int workers = cfg.workers > 0 ? cfg.workers
                                  : static_cast<int>(std::min(8u, std::max(1u, std::thread::hardware_concurrency())));
    if (workers <= 1 || instances.size() <= 1) {
        for (std::size_t i = 0; i < instances.size(); ++i) evaluate(i);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w)
            pool.emplace_back([&] {
                for (std::size_t i = next.fetch_add(1); i < instances.size(); i = next.fetch_add(1)) evaluate(i);
            });
        for (auto& th : pool) th.join();
    }

    CampaignTally tally;
    for (const Slot& slot : slots) {
        if (slot.resumed) ++tally.resumed;
        for (const VerificationReport& rep : slot.reports) {
            if (rep.verdict == "pass") ++tally.pass;
            else if (rep.verdict == "fail") ++tally.fail;
            else ++tally.skipped;
            sink(rep);
        }
    }
    return tally;
}

} // namespace ekr
