#include "homog/regularity.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <unordered_set>

#include "homog/errors.hpp"
#include "homog/rng.hpp"
#include "homog/threading.hpp"

namespace homog {

PairClassification classify_pairs(const Graph& g, const std::vector<VertexSet>& parts,
                                  const Rational& gamma) {
    int k = int(parts.size());
    for (const auto& p : parts)
        if (p.size < 1) throw ArgumentError("classify_pairs: empty part");
    PairClassification cls;
    cls.k = k;
    long long total = (long long)k * (k - 1) / 2;
    cls.labels.assign(std::size_t(total), PairLabel::Bad);
    cls.densities.assign(std::size_t(total), Density{});

    // flat pair list so chunks can be dispatched by index
    std::vector<std::pair<int, int>> pairs;
    pairs.reserve(std::size_t(total));
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) pairs.emplace_back(i, j);

    const long long gn = gamma.num(), gd = gamma.den();
    parallel_for(total, [&](long long b, long long e) {
        for (long long t = b; t < e; ++t) {
            auto [i, j] = pairs[std::size_t(t)];
            const VertexSet& u = parts[std::size_t(i)];
            const VertexSet& v = parts[std::size_t(j)];
            Density d;
            if (u.size == 1 && v.size == 1) {
                d.num = g.has_edge(u.bits.first_set(), v.bits.first_set()) ? 1 : 0;
                d.den = 1;
            } else {
                d.num = count_edges_between(g, u, v);
                d.den = (long long)u.size * v.size;
            }
            PairLabel lab;
            if ((__int128)d.num * gd <= (__int128)gn * d.den)
                lab = PairLabel::Low;
            else if ((__int128)d.num * gd >= (__int128)(gd - gn) * d.den)
                lab = PairLabel::High;
            else
                lab = PairLabel::Bad;
            cls.labels[std::size_t(t)] = lab;
            cls.densities[std::size_t(t)] = d;
        }
    });
    for (auto lab : cls.labels)
        if (lab == PairLabel::Bad) ++cls.bad_count;
    return cls;
}

std::string RegularPartition::to_text() const {
    std::ostringstream out;
    out << "homog partition v1\n";
    out << "k " << k() << "\n";
    out << "gamma " << gamma.str() << "\n";
    out << "bad_count " << bad_count << "\n";
    int n = parts.empty() ? 0 : parts[0].bits.size_bits();
    std::vector<int> member_of(std::size_t(n), -1);
    for (int i = 0; i < k(); ++i)
        parts[std::size_t(i)].bits.for_each([&](int v) { member_of[std::size_t(v)] = i; });
    out << "membership";
    for (int v = 0; v < n; ++v) out << " " << member_of[std::size_t(v)];
    out << "\nlabels";
    for (auto lab : labels)
        out << " " << (lab == PairLabel::Low ? "LOW" : lab == PairLabel::High ? "HIGH" : "BAD");
    out << "\nend\n";
    return out.str();
}

RegularPartition RegularPartition::from_text(const std::string& text, const Graph& g) {
    std::istringstream in(text);
    std::string line;
    RegularPartition rp;
    int k = -1;
    long long bad = -1;
    std::vector<int> membership;
    std::vector<PairLabel> labels;
    bool have_gamma = false;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string key;
        if (!(ls >> key)) continue;
        if (key == "homog" || key == "end") continue;
        if (key == "k") {
            ls >> k;
        } else if (key == "gamma") {
            std::string v;
            ls >> v;
            rp.gamma = Rational::parse(v);
            have_gamma = true;
        } else if (key == "bad_count") {
            ls >> bad;
        } else if (key == "membership") {
            int m;
            while (ls >> m) membership.push_back(m);
        } else if (key == "labels") {
            std::string lab;
            while (ls >> lab) {
                if (lab == "LOW")
                    labels.push_back(PairLabel::Low);
                else if (lab == "HIGH")
                    labels.push_back(PairLabel::High);
                else if (lab == "BAD")
                    labels.push_back(PairLabel::Bad);
                else
                    throw ParseError("bad pair label '" + lab + "'");
            }
        } else {
            throw ParseError("unexpected partition line: '" + line + "'");
        }
    }
    if (k < 1 || !have_gamma || bad < 0) throw ParseError("partition text missing fields");
    if (int(membership.size()) != g.n()) throw ParseError("partition membership length mismatch");
    if ((long long)labels.size() != (long long)k * (k - 1) / 2)
        throw ParseError("partition label triangle length mismatch");
    rp.parts.assign(std::size_t(k), VertexSet(g.n()));
    for (int v = 0; v < g.n(); ++v) {
        int p = membership[std::size_t(v)];
        if (p < 0 || p >= k) throw ParseError("partition membership out of range");
        rp.parts[std::size_t(p)].add(v);
    }
    rp.labels = std::move(labels);
    rp.bad_count = bad;
    auto recheck = classify_pairs(g, rp.parts, rp.gamma);
    if (recheck.labels != rp.labels || recheck.bad_count != rp.bad_count)
        throw ParseError("partition text inconsistent with graph densities");
    rp.densities = std::move(recheck.densities);
    return rp;
}

namespace {

struct VecHash {
    std::size_t operator()(const std::vector<int>& v) const {
        std::size_t h = 1469598103934665603ull;
        for (int x : v) {
            h ^= std::size_t(x) + 0x9e3779b9;
            h *= 1099511628211ull;
        }
        return h;
    }
};

// Accumulates distinct verified copies per family member across rounds.
struct EvidencePools {
    std::vector<std::unordered_set<std::vector<int>, VecHash>> seen;
    std::vector<std::vector<InducedCopy>> copies;

    explicit EvidencePools(std::size_t members) : seen(members), copies(members) {}

    bool known(std::size_t member, const std::vector<int>& sorted_key) const {
        return seen[member].count(sorted_key) > 0;
    }
    void insert(std::size_t member, std::vector<int> sorted_key, std::vector<int> image) {
        if (seen[member].insert(std::move(sorted_key)).second)
            copies[member].push_back(InducedCopy{std::move(image)});
    }
    long long total() const {
        long long t = 0;
        for (const auto& c : copies) t += (long long)c.size();
        return t;
    }
};

// Member order for probing a bad pair: on sparse-looking pairs try bipartite
// members first, on dense-looking pairs co-bipartite first, otherwise split
// first.
std::vector<std::size_t> member_order(const FamilySpec& fam, const Density& d) {
    int side; // 0 low, 1 mid, 2 high
    if (cmp_frac(d.num, d.den, 1, 3) <= 0)
        side = 0;
    else if (cmp_frac(d.num, d.den, 2, 3) >= 0)
        side = 2;
    else
        side = 1;
    auto rank = [&](const FamilyMember& m) {
        const auto& fl = m.flags;
        if (side == 0) return fl.bipartite ? 0 : fl.split ? 1 : fl.co_bipartite ? 2 : 3;
        if (side == 2) return fl.co_bipartite ? 0 : fl.split ? 1 : fl.bipartite ? 2 : 3;
        return fl.split ? 0 : fl.bipartite ? 1 : fl.co_bipartite ? 2 : 3;
    };
    std::vector<std::size_t> order(fam.members.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return rank(fam.members[a]) < rank(fam.members[b]);
    });
    return order;
}

// One probing sweep over the bad pairs. Returns the member index that
// reached the target, or -1.
int probe_round(const Graph& g, const FamilySpec& fam, const std::vector<VertexSet>& parts,
                const PairClassification& cls, Rng& rng, EvidencePools& pools,
                const AfnConfig& cfg) {
    int k = int(parts.size());
    long long budget = cfg.probe_budget_factor * cfg.evidence_target;
    std::vector<std::vector<int>> member_cache(parts.size());
    auto part_members = [&](int i) -> const std::vector<int>& {
        auto& m = member_cache[std::size_t(i)];
        if (m.empty() && parts[std::size_t(i)].size > 0) m = parts[std::size_t(i)].members();
        return m;
    };

    std::vector<int> image;
    for (int i = 0; i < k && budget > 0; ++i) {
        for (int j = i + 1; j < k && budget > 0; ++j) {
            std::size_t t = pair_index(k, i, j);
            if (cls.labels[t] != PairLabel::Bad) continue;
            const auto& vi = part_members(i);
            const auto& vj = part_members(j);
            for (std::size_t mi : member_order(fam, cls.densities[t])) {
                const FamilyMember& member = fam.members[mi];
                int m = member.g.n();
                if (m > 30) continue;
                image.assign(std::size_t(m), -1);
                // a split mask says how many vertices come from each side;
                // the drawn set is then tested against every labeling
                for (int si = 0; si <= m && budget > 0; ++si) {
                    int sj = m - si;
                    if (si > int(vi.size()) || sj > int(vj.size())) continue;
                    for (int rep = 0; rep < cfg.draws_per_assignment && budget > 0; ++rep) {
                        --budget;
                        bool clash = false;
                        for (int p = 0; p < m && !clash; ++p) {
                            const auto& pool = p < si ? vi : vj;
                            int tries = 0;
                            while (true) {
                                int cand = pool[rng.below(pool.size())];
                                bool dup = false;
                                for (int q = 0; q < p; ++q)
                                    if (image[std::size_t(q)] == cand) dup = true;
                                if (!dup) {
                                    image[std::size_t(p)] = cand;
                                    break;
                                }
                                if (++tries > 64) {
                                    clash = true;
                                    break;
                                }
                            }
                        }
                        if (clash) continue;
                        std::vector<int> key = image;
                        std::sort(key.begin(), key.end());
                        if (pools.known(mi, key)) continue;
                        auto emb = embedding_onto(g, key, member.g);
                        if (!emb) continue;
                        pools.insert(mi, std::move(key), std::move(*emb));
                        if (int(pools.copies[mi].size()) >= cfg.evidence_target) return int(mi);
                    }
                }
            }
        }
    }
    return -1;
}

std::vector<VertexSet> refine_by_fingerprints(const Graph& g, const std::vector<VertexSet>& parts,
                                              const PairClassification& cls, const Rational& gamma,
                                              int k_new) {
    int k = int(parts.size());
    int n = g.n();
    // witness parts: the ones on the most bad pairs
    std::vector<long long> bad_inc(std::size_t(k), 0);
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            if (cls.labels[pair_index(k, i, j)] == PairLabel::Bad) {
                ++bad_inc[std::size_t(i)];
                ++bad_inc[std::size_t(j)];
            }
    long long inv_gamma = Rational(gamma.den(), gamma.num()).ceil();
    int w = int(std::bit_width(uint64_t(std::max<long long>(1, inv_gamma - 1))));
    w = std::min({w, k, 16});
    std::vector<int> witness(std::size_t(k), 0);
    for (int i = 0; i < k; ++i) witness[std::size_t(i)] = i;
    std::stable_sort(witness.begin(), witness.end(), [&](int a, int b) {
        return bad_inc[std::size_t(a)] > bad_inc[std::size_t(b)];
    });
    witness.resize(std::size_t(w));

    std::vector<uint64_t> fp(std::size_t(n), 0);
    for (int t = 0; t < w; ++t) {
        const VertexSet& wp = parts[std::size_t(witness[std::size_t(t)])];
        for (int v = 0; v < n; ++v) {
            long long cnt = g.row(v).and_count(wp.bits);
            uint64_t bucket = uint64_t((cnt * 15) / std::max(1, wp.size));
            fp[std::size_t(v)] |= bucket << (4 * t);
        }
    }

    // keep vertices of a part together, ordered by fingerprint, then re-slice
    std::vector<int> order;
    order.reserve(std::size_t(n));
    for (const auto& p : parts) {
        auto mem = p.members();
        std::stable_sort(mem.begin(), mem.end(), [&](int a, int b) {
            if (fp[std::size_t(a)] != fp[std::size_t(b)]) return fp[std::size_t(a)] < fp[std::size_t(b)];
            return a < b;
        });
        order.insert(order.end(), mem.begin(), mem.end());
    }
    auto out = std::vector<VertexSet>(std::size_t(k_new), VertexSet(n));
    int big = n % k_new;
    int base = n / k_new;
    std::size_t pos = 0;
    for (int i = 0; i < k_new; ++i) {
        int sz = base + (i < big ? 1 : 0);
        for (int s = 0; s < sz; ++s) out[std::size_t(i)].add(order[pos++]);
    }
    return out;
}

} // namespace

PartitionOutcome afn_partition(const Graph& g, const FamilySpec& fam, const Rational& gamma,
                               int k0, int k_max, uint64_t seed, const AfnConfig& cfg) {
    if (!fam.validate().ok)
        throw ArgumentError("afn_partition: family fails the bipartite/co-bipartite/split check: " +
                            fam.validate().reason);
    if (k0 < 1 || k0 > k_max || k_max > g.n())
        throw ArgumentError("afn_partition: need 1 <= k0 <= k_max <= n");
    if (gamma <= Rational(0) || gamma >= Rational(1))
        throw ArgumentError("afn_partition: gamma must be in (0, 1)");

    PartitionOutcome out;
    EvidencePools pools(fam.members.size());
    Rng rng(mix_seed(seed, 0x41464EULL));

    std::vector<VertexSet> parts = equipartition(g, k0, seed);
    while (true) {
        ++out.stats.rounds;
        int k = int(parts.size());
        auto cls = classify_pairs(g, parts, gamma);
        out.stats.trajectory.emplace_back(k, cls.bad_count);
        long long pair_total = (long long)k * (k - 1) / 2;
        if ((__int128)cls.bad_count * gamma.den() <= (__int128)gamma.num() * pair_total) {
            RegularPartition rp;
            rp.parts = std::move(parts);
            rp.gamma = gamma;
            rp.labels = std::move(cls.labels);
            rp.densities = std::move(cls.densities);
            rp.bad_count = cls.bad_count;
            out.stats.copies_found = pools.total();
            out.value = std::move(rp);
            return out;
        }
        int hit = probe_round(g, fam, parts, cls, rng, pools, cfg);
        out.stats.copies_found = pools.total();
        if (hit >= 0) {
            InducedCopyEvidence ev;
            ev.pattern_name = fam.members[std::size_t(hit)].name;
            ev.pattern = fam.members[std::size_t(hit)].g;
            ev.copies = pools.copies[std::size_t(hit)];
            ev.claimed_lower_bound = (long long)ev.copies.size();
            out.value = std::move(ev);
            return out;
        }
        if (k >= k_max) {
            std::ostringstream msg;
            msg << "afn_partition exhausted at k=" << k << " (k_max=" << k_max
                << "): bad-pair trajectory";
            for (auto [kk, bb] : out.stats.trajectory) msg << " (" << kk << "," << bb << ")";
            msg << ", verified copies found " << pools.total() << " of target "
                << cfg.evidence_target;
            throw ExhaustionError(msg.str());
        }
        int k_new = int(std::min<long long>(2LL * k, k_max));
        parts = refine_by_fingerprints(g, parts, cls, gamma, k_new);
    }
}

} // namespace homog
