#include "homog/pipeline.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "homog/clique.hpp"
#include "homog/cograph.hpp"
#include "homog/errors.hpp"
#include "homog/rng.hpp"

namespace homog {

Parameters derive_parameters(const Rational& eps, const FamilySpec& fam) {
    if (eps <= Rational(0) || eps >= Rational(1, 2))
        throw ArgumentError("derive_parameters: eps must be in (0, 1/2)");
    if (fam.f < 2) throw ArgumentError("derive_parameters: family has no member of order >= 2");
    if (fam.c <= Rational(0) || fam.c > Rational(1))
        throw ArgumentError("derive_parameters: c must be in (0, 1]");

    Parameters p;
    p.eps = eps;
    p.f = fam.f;
    p.c = fam.c;
    p.c_const = fam.c_const;
    p.b_target = Rational(4) / eps;

    Rational g1(1, (long long)fam.f * fam.f);
    Rational g2 = eps / Rational(4);
    // (c*eps/4)^(1/c): exact when 1/c is an integer; otherwise round the
    // exponent up, which can only lower the value and so keeps every
    // downstream inequality valid.
    Rational base = fam.c * eps / Rational(4);
    long long e = (fam.c.num() == 1)
                      ? fam.c.den()
                      : (fam.c.den() + fam.c.num() - 1) / fam.c.num();
    if (e > 64) throw ArgumentError("derive_parameters: exponent 1/c too large");
    Rational g3 = base.pow(int(e)) * Rational(1, 2);
    p.gamma = std::min({g1, g2, g3});

    // Extraction chain: the clique target must be big enough that the
    // clique-or-independent-set step clears 4/eps. Lower gamma until it does.
    int p_num = int(fam.c.num());
    int q_den = int(fam.c.den());
    Rational rhs = p.b_target.pow(q_den);
    for (int iter = 0; iter < 128; ++iter) {
        long long ct = (Rational(1) / (p.gamma * Rational(2))).ceil();
        Rational lhs = fam.c_const.pow(q_den) * Rational(ct).pow(p_num);
        if (lhs >= rhs) {
            p.clique_target = ct;
            break;
        }
        p.gamma = p.gamma * Rational(1, 2);
        p.tightened = true;
    }
    if (p.clique_target == 0)
        throw ArgumentError("derive_parameters: could not satisfy the extraction chain");

    p.k0 = (Rational(1) / p.gamma).ceil();
    p.k_max = p.k0 * p.k0 * p.k0; // k0 * ceil(1/gamma)^2
    return p;
}

ReducedGraph build_r_prime(const RegularPartition& partition) {
    int k = partition.k();
    ReducedGraph r;
    r.rule = ReducedRule::RPrime;
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            if (partition.label(i, j) != PairLabel::Bad) es.emplace_back(i, j);
    r.g = Graph::from_edges(k, es);
    r.part_of.resize(std::size_t(k));
    for (int i = 0; i < k; ++i) r.part_of[std::size_t(i)] = i;
    r.homogeneous_pairs = (long long)es.size();
    // e(R') >= (1-gamma) C(k,2)
    long long pairs = partition.pair_count();
    const Rational& gm = partition.gamma;
    r.edge_bound_ok =
        (__int128)r.homogeneous_pairs * gm.den() >= (__int128)(gm.den() - gm.num()) * pairs;
    return r;
}

std::vector<int> turan_clique(const ReducedGraph& r_prime, long long target) {
    auto greedy = greedy_clique(r_prime.g);
    if (!is_clique(r_prime.g, greedy))
        throw ViolationError("turan_clique: greedy produced a non-clique");
    if ((long long)greedy.size() >= target) return greedy;
    auto exact = max_clique_exact(r_prime.g);
    if ((long long)exact.size() >= target) return exact;
    std::ostringstream msg;
    msg << "turan_clique: target " << target << " unreachable; max clique "
        << exact.size() << ", e(R')=" << r_prime.g.edge_count() << " on k=" << r_prime.g.n()
        << " vertices (edge-count precondition failed)";
    throw ViolationError(msg.str());
}

ReducedGraph build_signed_reduced(const RegularPartition& partition, const std::vector<int>& a) {
    ReducedGraph r;
    r.rule = ReducedRule::RSigned;
    r.part_of = a;
    std::sort(r.part_of.begin(), r.part_of.end());
    int m = int(r.part_of.size());
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            PairLabel lab = partition.label(r.part_of[std::size_t(i)], r.part_of[std::size_t(j)]);
            if (lab == PairLabel::Bad)
                throw ViolationError("build_signed_reduced: pair (" +
                                     std::to_string(r.part_of[std::size_t(i)]) + "," +
                                     std::to_string(r.part_of[std::size_t(j)]) +
                                     ") inside A is not homogeneous");
            if (lab == PairLabel::High) es.emplace_back(i, j);
        }
    r.g = Graph::from_edges(m, es);
    r.homogeneous_pairs = (long long)m * (m - 1) / 2;
    r.edge_bound_ok = true;
    return r;
}

std::optional<ReducedHit> find_induced_in_reduced(const ReducedGraph& r, const FamilySpec& fam,
                                                  long long subset_budget) {
    int a = r.g.n();
    for (std::size_t mi = 0; mi < fam.members.size(); ++mi) {
        const FamilyMember& member = fam.members[mi];
        int m = member.g.n();
        if (m > a) continue;
        if (!member.p4_map.empty()) {
            auto p4 = find_induced_p4(r.g);
            if (!p4) continue;
            ReducedHit hit;
            hit.member = int(mi);
            hit.parts.resize(4);
            for (int t = 0; t < 4; ++t)
                hit.parts[std::size_t(member.p4_map[std::size_t(t)])] =
                    r.part_of[std::size_t((*p4)[std::size_t(t)])];
            return hit;
        }
        if (subset_count_capped(a, m, subset_budget) > subset_budget)
            throw CapacityError("find_induced_in_reduced: subset budget exceeded for member '" +
                                member.name + "'");
        std::vector<int> idx(std::size_t(m), 0);
        for (int i = 0; i < m; ++i) idx[std::size_t(i)] = i;
        while (true) {
            auto emb = embedding_onto(r.g, idx, member.g);
            if (emb) {
                ReducedHit hit;
                hit.member = int(mi);
                hit.parts.reserve(std::size_t(m));
                for (int v : *emb) hit.parts.push_back(r.part_of[std::size_t(v)]);
                return hit;
            }
            int i = m - 1;
            while (i >= 0 && idx[std::size_t(i)] == a - m + i) --i;
            if (i < 0) break;
            ++idx[std::size_t(i)];
            for (int j = i + 1; j < m; ++j) idx[std::size_t(j)] = idx[std::size_t(j - 1)] + 1;
        }
    }
    return std::nullopt;
}

InducedCopyEvidence case1_evidence(const Graph& g, const RegularPartition& partition,
                                   const ReducedHit& hit, const FamilySpec& fam,
                                   const Parameters& params, uint64_t seed, int evidence_target) {
    const FamilyMember& member = fam.members[std::size_t(hit.member)];
    int m = member.g.n();
    std::vector<const VertexSet*> assignment(std::size_t(m), nullptr);
    for (int p = 0; p < m; ++p)
        assignment[std::size_t(p)] = &partition.parts[std::size_t(hit.parts[std::size_t(p)])];

    auto ccr = find_cross_copies(g, member.g, assignment, evidence_target,
                                 mix_seed(seed, 0xCA5E1ULL));
    if (ccr.copies.empty())
        throw ViolationError("case1_evidence: sampling found no copies of '" + member.name +
                             "'; the pair densities must have been misclassified");

    InducedCopyEvidence ev;
    ev.pattern_name = member.name;
    ev.pattern = member.g;
    ev.copies = std::move(ccr.copies);

    BoundDerivation d;
    d.part_indices = hit.parts;
    unsigned __int128 prod = 1;
    for (int p = 0; p < m; ++p) {
        long long sz = partition.parts[std::size_t(hit.parts[std::size_t(p)])].size;
        d.part_sizes.push_back(sz);
        prod *= (unsigned __int128)sz;
    }
    if (prod > (unsigned __int128)1 << 62)
        throw ViolationError("case1_evidence: copy lower bound overflows");
    ev.claimed_lower_bound = (long long)((prod + 1) / 2);
    for (int p = 0; p < m; ++p)
        for (int q = p + 1; q < m; ++q)
            d.pair_densities.push_back(
                partition.density(hit.parts[std::size_t(p)], hit.parts[std::size_t(q)]));
    ev.derivation = std::move(d);
    (void)params;
    return ev;
}

EhResult eh_clique_or_independent(const ReducedGraph& r, const FamilySpec& fam) {
    EhResult res;
    bool has_p4_member = false;
    for (const auto& m : fam.members)
        if (!m.p4_map.empty()) has_p4_member = true;

    std::vector<int> clique, indep;
    if (has_p4_member) {
        auto ct = cotree_analyze(r.g);
        if (!ct.is_cograph)
            throw ViolationError("eh_clique_or_independent: reduced graph has an induced 4-path "
                                 "although the family search reported none");
        clique = std::move(ct.max_clique);
        indep = std::move(ct.max_independent);
    } else {
        clique = max_clique_exact(r.g);
        indep = max_independent_exact(r.g);
    }
    if (clique.size() >= indep.size()) {
        res.members = std::move(clique);
        res.clique_side = true;
    } else {
        res.members = std::move(indep);
        res.clique_side = false;
    }
    std::sort(res.members.begin(), res.members.end());

    // |B| >= c_const * |A|^c, compared exactly after raising to the power
    // den(c)
    int p = int(fam.c.num()), q = int(fam.c.den());
    Rational lhs = Rational((long long)res.members.size()).pow(q);
    Rational rhs = fam.c_const.pow(q) * Rational(r.g.n()).pow(p);
    if (lhs < rhs)
        throw ViolationError(
            "eh_clique_or_independent: extracted set of size " + std::to_string(res.members.size()) +
            " misses c_const*|A|^c for |A|=" + std::to_string(r.g.n()) +
            "; the configured (c, const) pair overstates the family");
    return res;
}

std::variant<HomogeneousSetCertificate, Case2Violation> case2_assemble(
    const Graph& g, const RegularPartition& partition, const std::vector<int>& parts_used,
    bool clique_side, const Parameters& params) {
    HomogeneousSetCertificate cert;
    cert.parts_used = parts_used;
    std::sort(cert.parts_used.begin(), cert.parts_used.end());
    cert.x = VertexSet(g.n());
    for (int pi : cert.parts_used) {
        const VertexSet& part = partition.parts[std::size_t(pi)];
        cert.x.bits |= part.bits;
        cert.x.size += part.size;
    }
    if (cert.x.size < 2)
        return Case2Violation{"union of parts has fewer than 2 vertices", Density{}};
    cert.density = set_density(g, cert.x);
    cert.side = clique_side ? Side::Dense : Side::Sparse;
    cert.delta_actual = Rational(cert.x.size, g.n());
    bool ok = clique_side ? cert.density.ge_one_minus(params.eps) : cert.density.le(params.eps);
    if (!ok) {
        std::ostringstream msg;
        msg << "recount d(X)=" << cert.density.str() << " violates the "
            << (clique_side ? "dense" : "sparse") << " bound at eps=" << params.eps.str() << " (t="
            << parts_used.size() << ", 4/eps=" << params.b_target.str() << ")";
        return Case2Violation{msg.str(), cert.density};
    }
    return cert;
}

namespace {

long long greedy_feasible_target(long long k, long long bad_count) {
    // the complement of R' has bad_count edges; greedy yields at least
    // k^2/(2*bad + k)
    __int128 numsq = (__int128)k * k;
    __int128 den = 2 * (__int128)bad_count + k;
    return (long long)((numsq + den - 1) / den);
}

void check_certificate(const Graph& g, const HomogeneousSetCertificate& cert,
                       const Parameters& params) {
    Density d = set_density(g, cert.x);
    if (d.num != cert.density.num || d.den != cert.density.den)
        throw ViolationError("outcome re-verification: density recount mismatch");
    bool ok = cert.side == Side::Dense ? d.ge_one_minus(params.eps) : d.le(params.eps);
    if (!ok) throw ViolationError("outcome re-verification: homogeneity bound fails");
    if (cert.delta_actual != Rational(cert.x.size, g.n()))
        throw ViolationError("outcome re-verification: delta_actual mismatch");
}

void check_evidence(const Graph& g, const InducedCopyEvidence& ev) {
    for (const auto& c : ev.copies)
        if (!verify_induced(g, ev.pattern, c.image))
            throw ViolationError("outcome re-verification: evidence copy fails the induced check");
}

} // namespace

Outcome run(const Graph& g, const Rational& eps, const FamilySpec& fam, uint64_t seed,
            const RunConfig& cfg) {
    auto val = fam.validate();
    if (!val.ok) throw ArgumentError("run: family invalid: " + val.reason);
    if (g.n() < cfg.min_n)
        throw ScaleError("run: n=" + std::to_string(g.n()) + " below the configured minimum " +
                         std::to_string(cfg.min_n));

    Parameters params = derive_parameters(eps, fam);

    Outcome out;
    out.params = params;
    out.family_name = fam.name;
    out.digest_n = g.n();
    out.digest_m = g.edge_count();

    long long k_max_l = std::min<long long>(params.k_max, g.n());
    if (cfg.k_max_override > 0) k_max_l = std::min(k_max_l, cfg.k_max_override);
    int k_max = int(std::max<long long>(1, k_max_l));
    int k0 = int(std::max<long long>(
        1, std::min<long long>(params.k0, std::min<long long>(k_max, g.n() / 3))));

    AfnConfig afn_cfg;
    afn_cfg.evidence_target = cfg.evidence_target;

    // the non-p4 members need subset scans in the reduced graph; cap |A| so
    // the scan stays within budget
    const long long subset_budget = 2'000'000;
    int a_cap = 0; // 0 = unlimited
    for (const auto& m : fam.members) {
        if (!m.p4_map.empty()) continue;
        int mm = m.g.n();
        int hi = 2;
        while (subset_count_capped(hi + 1, mm, subset_budget) <= subset_budget) ++hi;
        a_cap = a_cap == 0 ? hi : std::min(a_cap, hi);
    }

    int rounds_total = 0;
    while (true) {
        PartitionOutcome po = afn_partition(g, fam, params.gamma, k0, k_max, seed, afn_cfg);
        rounds_total += po.stats.rounds;
        if (!po.is_partition()) {
            InducedCopyEvidence ev = po.evidence();
            check_evidence(g, ev);
            out.value = std::move(ev);
            out.trace.branch = Branch::PartitionEvidence;
            out.trace.k = po.stats.trajectory.back().first;
            out.trace.bad_count = po.stats.trajectory.back().second;
            out.trace.rounds = rounds_total;
            return out;
        }
        const RegularPartition& partition = po.partition();
        long long k = partition.k();

        ReducedGraph r_prime = build_r_prime(partition);
        long long target = std::min(params.clique_target,
                                    greedy_feasible_target(k, partition.bad_count));
        std::vector<int> a = turan_clique(r_prime, target);
        if (a_cap > 0 && (long long)a.size() > a_cap) a.resize(std::size_t(a_cap));

        ReducedGraph r = build_signed_reduced(partition, a);
        // chain bookkeeping for the trace
        {
            int pnum = int(params.c.num()), qden = int(params.c.den());
            Rational lhs = params.c_const.pow(qden) * Rational((long long)a.size()).pow(pnum);
            out.trace.chain_ok = lhs >= params.b_target.pow(qden);
        }

        auto hit = find_induced_in_reduced(r, fam);
        if (hit) {
            InducedCopyEvidence ev = case1_evidence(g, partition, *hit, fam, params,
                                                    mix_seed(seed, uint64_t(rounds_total)),
                                                    cfg.evidence_target);
            check_evidence(g, ev);
            out.value = std::move(ev);
            out.trace.branch = Branch::Case1;
            out.trace.k = k;
            out.trace.bad_count = partition.bad_count;
            out.trace.a_size = (long long)a.size();
            out.trace.rounds = rounds_total;
            return out;
        }

        EhResult eh = eh_clique_or_independent(r, fam);
        std::vector<int> parts_used;
        parts_used.reserve(eh.members.size());
        for (int rv : eh.members) parts_used.push_back(r.part_of[std::size_t(rv)]);
        long long t = (long long)parts_used.size();

        auto res = case2_assemble(g, partition, parts_used, eh.clique_side, params);
        bool retry = false;
        std::string retry_why;
        if (std::holds_alternative<HomogeneousSetCertificate>(res)) {
            auto& cert = std::get<HomogeneousSetCertificate>(res);
            // honour the promised delta: |X|/n >= t/k
            if ((__int128)cert.x.size * k >= (__int128)t * g.n()) {
                check_certificate(g, cert, params);
                out.trace.branch = Branch::Case2;
                out.trace.k = k;
                out.trace.bad_count = partition.bad_count;
                out.trace.a_size = (long long)a.size();
                out.trace.b_size = t;
                out.trace.side = cert.side;
                out.trace.side_meaningful = true;
                out.trace.rounds = rounds_total;
                out.trace.delta_promised = Rational(t, k);
                out.trace.b_meets_target = Rational(t) >= params.b_target;
                out.value = std::move(cert);
                return out;
            }
            retry = true;
            retry_why = "certificate under-delivers the promised t/k fraction";
        } else {
            retry = true;
            retry_why = std::get<Case2Violation>(res).detail;
        }
        if (retry) {
            if (k >= k_max)
                throw ViolationError("run: " + retry_why + " and k_max=" +
                                     std::to_string(k_max) + " is already reached");
            k0 = int(std::min<long long>(2 * k, k_max));
            continue;
        }
    }
}

} // namespace homog
