/*
   Copyright 2026 The quartic authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "quartic/search.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <fstream>
#include <mutex>
#include <set>
#include <thread>
#include <unordered_map>
#include <unordered_set>

#include "json.hpp"

namespace quartic {

UniPoly<Rational> r_quadratic(const Rational& m, const Rational& n, const CurveParams& p) {
    using P = UniPoly<Rational>;
    P res = cubic_family_residual<P>(P(m), P(n), P::variable(), P(p.s), P(p.t));
    if (res.degree() > 2) throw std::logic_error("r_quadratic: residual has degree > 2 in r");
    return res;
}

namespace {

std::string canonical_key(const QuarticPoint& q) {
    return q.x.str() + "," + q.y.str() + "," + q.z.str() + "," + q.w.str();
}

// Canonicalize a raw fiber lift into a record; nullopt for filtered or
// unusable lifts (trivial, zero point).
std::optional<SolutionRecord> make_record(const FiberSolution& fs, const Cell& cell,
                                          SolutionRecord::Branch branch,
                                          const std::variant<Rational, QuadExtElem>& r,
                                          bool emit_trivial) {
    const QuarticPoint& q = fs.point;
    if (q.x.is_zero() && q.y.is_zero() && q.z.is_zero() && q.w.is_zero()) return std::nullopt;
    SolutionRecord rec;
    rec.solution = canonicalize(q);
    if (!emit_trivial && is_trivial(rec.solution)) return std::nullopt;
    rec.cell = cell;
    rec.branch = branch;
    rec.r = r;
    rec.g = fs.g;
    return rec;
}

} // namespace

bool cell_skipped(const Cell& c) {
    if (c.s == c.t || c.s == -c.t) return true;
    if (c.s == 0 || c.t == 0) return true;
    if (c.m == 0 && c.n == 0) return true;
    return false;
}

CellOutcome scan_cell(long m, long n, const CurveParams& p, bool emit_trivial) {
    CellOutcome out;
    Cell cell{m, n, 0, 0};
    if (p.s.is_integer()) cell.s = p.s.num().get_si();
    if (p.t.is_integer()) cell.t = p.t.num().get_si();

    const Rational rm(m), rn(n);
    UniPoly<Rational> rq = r_quadratic(rm, rn, p);
    if (rq.is_zero()) {
        out.diagnostic = "curve residual identically zero in r";
        return out;
    }

    RootSet roots = solve_quadratic(rq);
    if (std::holds_alternative<NoRoot>(roots)) {
        out.diagnostic = "residual constant in r, no cubic point in this cell";
        return out;
    }

    if (const auto* two = std::get_if<TwoRational>(&roots); two || std::holds_alternative<OneRational>(roots)) {
        out.branch = CellOutcome::Branch::step1;
        std::vector<Rational> rvals;
        if (two) {
            rvals.push_back(two->first);
            if (two->second != two->first) rvals.push_back(two->second);
        } else {
            rvals.push_back(std::get<OneRational>(roots).root);
        }
        std::vector<FiberSolution> fiber;
        try {
            fiber = fiber_solutions({rm, rn, rvals.front()}, p);
        } catch (const degenerate_error& e) {
            out.branch = CellOutcome::Branch::degenerate;
            out.diagnostic = e.what();
            return out;
        }
        for (const FiberSolution& fs : fiber) {
            // Attribute the lift to the r-root whose g-formula produces it.
            Rational r_prov = rvals.front();
            for (const Rational& rv : rvals) {
                CubicPoint c{rm, rn, rv};
                auto g1 = g_from_first(c, p);
                auto g2 = g_from_second(c, p);
                if ((g1 && *g1 == fs.g) || (g2 && *g2 == fs.g)) {
                    r_prov = rv;
                    break;
                }
            }
            if (auto rec = make_record(fs, cell, SolutionRecord::Branch::step1, r_prov, emit_trivial))
                out.records.push_back(std::move(*rec));
        }
        return out;
    }

    // Step 2: conjugate roots in a quadratic extension.
    const QuadExtElem r_root = std::get<ConjugatePair>(roots).root;
    try {
        CubicPoint euler = euler_point(p);
        ExtCubicPoint conj_point{QuadExtElem(rm), QuadExtElem(rn), r_root};
        ChordResult<QuadExtElem> chord = chord_third_ex(conj_point, to_ext(euler), p);
        CubicPoint descended = conj_descend(chord.point, p);
        std::vector<FiberSolution> fiber = fiber_solutions(descended, p);

        out.branch = CellOutcome::Branch::step2;
        out.trace = Step2Trace{r_root, conj_point, euler, chord.g, chord.point, descended};
        for (const FiberSolution& fs : fiber)
            if (auto rec = make_record(fs, cell, SolutionRecord::Branch::step2, r_root, emit_trivial))
                out.records.push_back(std::move(*rec));
        return out;
    } catch (const degenerate_error& e) {
        out.branch = CellOutcome::Branch::degenerate;
        out.diagnostic = e.what();
        return out;
    } catch (const std::domain_error& e) {
        out.branch = CellOutcome::Branch::degenerate;
        out.diagnostic = e.what();
        return out;
    } catch (const std::invalid_argument& e) {
        out.branch = CellOutcome::Branch::degenerate;
        out.diagnostic = e.what();
        return out;
    }
}

namespace {

struct CheckpointState {
    std::uint64_t next_index = 0;
    std::vector<std::string> keys;
};

void write_checkpoint(const std::string& path, std::uint64_t watermark, const Cell& last,
                      const std::set<std::string>& keys) {
    nlohmann::ordered_json j;
    j["next_index"] = watermark;
    j["last_cell"] = {{"m", last.m}, {"n", last.n}, {"s", last.s}, {"t", last.t}};
    j["emitted"] = keys;
    std::string tmp = path + ".tmp";
    {
        std::ofstream os(tmp);
        os << j.dump() << "\n";
    }
    std::rename(tmp.c_str(), path.c_str());
}

std::optional<CheckpointState> read_checkpoint(const std::string& path) {
    std::ifstream is(path);
    if (!is) return std::nullopt;
    nlohmann::ordered_json j;
    try {
        is >> j;
        CheckpointState st;
        st.next_index = j.at("next_index").get<std::uint64_t>();
        for (const auto& k : j.at("emitted")) st.keys.push_back(k.get<std::string>());
        return st;
    } catch (...) {
        return std::nullopt;
    }
}

} // namespace

SearchSummary run_search(const SearchConfig& cfg, const std::function<void(const SolutionRecord&)>& emit) {
    for (const CellRange* r : {&cfg.m, &cfg.n, &cfg.s, &cfg.t})
        if (r->lo > r->hi) throw std::invalid_argument("run_search: empty range");

    const std::uint64_t nm = cfg.m.size(), nn = cfg.n.size(), ns = cfg.s.size(), nt = cfg.t.size();
    const std::uint64_t total = nm * nn * ns * nt;
    auto decode = [&](std::uint64_t idx) {
        Cell c;
        c.t = cfg.t.lo + static_cast<long>(idx % nt);
        idx /= nt;
        c.s = cfg.s.lo + static_cast<long>(idx % ns);
        idx /= ns;
        c.n = cfg.n.lo + static_cast<long>(idx % nn);
        idx /= nn;
        c.m = cfg.m.lo + static_cast<long>(idx);
        return c;
    };

    std::uint64_t start = 0;
    std::set<std::string> dedup;
    if (cfg.resume && !cfg.checkpoint_path.empty()) {
        if (auto st = read_checkpoint(cfg.checkpoint_path)) {
            start = std::min<std::uint64_t>(st->next_index, total);
            dedup.insert(st->keys.begin(), st->keys.end());
        }
    }

    SearchSummary sum;
    sum.cells_total = total;

    std::mutex mu;
    std::atomic<std::uint64_t> next{start};
    std::vector<std::uint8_t> done(total, 0);
    std::uint64_t watermark = start;
    std::uint64_t ordinal = 0;
    std::uint64_t since_checkpoint = 0;

    auto worker = [&] {
        while (true) {
            std::uint64_t idx = next.fetch_add(1);
            if (idx >= total) return;
            Cell cell = decode(idx);

            bool skipped = cell_skipped(cell);
            CellOutcome outcome;
            if (!skipped)
                outcome = scan_cell(cell.m, cell.n, {Rational(cell.s), Rational(cell.t)}, cfg.emit_trivial);

            std::lock_guard<std::mutex> lock(mu);
            if (skipped) {
                sum.cells_skipped++;
            } else {
                switch (outcome.branch) {
                    case CellOutcome::Branch::step1: sum.cells_step1++; break;
                    case CellOutcome::Branch::step2: sum.cells_step2++; break;
                    case CellOutcome::Branch::degenerate: sum.cells_degenerate++; break;
                }
                for (SolutionRecord& rec : outcome.records) {
                    if (!is_solution(rec.solution))
                        throw std::logic_error("run_search: record fails the quartic residual");
                    if (!dedup.insert(canonical_key(rec.solution)).second) continue;
                    rec.ordinal = ordinal++;
                    sum.solutions++;
                    if (emit) emit(rec);
                }
            }
            done[idx] = 1;
            while (watermark < total && done[watermark]) ++watermark;
            if (!cfg.checkpoint_path.empty() && ++since_checkpoint >= 64) {
                since_checkpoint = 0;
                write_checkpoint(cfg.checkpoint_path, watermark,
                                 decode(watermark == 0 ? 0 : watermark - 1), dedup);
            }
        }
    };

    unsigned workers = std::max(1u, cfg.workers);
    if (workers == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (unsigned i = 0; i < workers; ++i) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    if (!cfg.checkpoint_path.empty())
        write_checkpoint(cfg.checkpoint_path, watermark, decode(total == 0 ? 0 : total - 1), dedup);
    return sum;
}

std::vector<QuarticPoint> brute_force_oracle(long bound) {
    if (bound < 1) throw std::invalid_argument("brute_force_oracle: bound must be >= 1");

    using u128 = unsigned __int128;
    struct U128Hash {
        std::size_t operator()(u128 v) const {
            return std::hash<std::uint64_t>{}(static_cast<std::uint64_t>(v) ^
                                              static_cast<std::uint64_t>(v >> 64) * 0x9e3779b97f4a7c15ULL);
        }
    };

    std::vector<u128> pow4(bound + 1);
    for (long i = 0; i <= bound; ++i) {
        u128 sq = static_cast<u128>(i) * static_cast<u128>(i);
        pow4[i] = sq * sq;
    }

    std::unordered_map<u128, std::vector<std::pair<long, long>>, U128Hash> sums;
    for (long x = 0; x <= bound; ++x)
        for (long y = x; y <= bound; ++y) sums[pow4[x] + pow4[y]].push_back({x, y});

    std::set<QuarticPoint> found;
    for (const auto& [value, pairs] : sums) {
        if (pairs.size() < 2) continue;
        for (std::size_t i = 0; i < pairs.size(); ++i)
            for (std::size_t j = i + 1; j < pairs.size(); ++j) {
                long a = pairs[i].first, b = pairs[i].second;
                long c = pairs[j].first, d = pairs[j].second;
                long g = std::gcd(std::gcd(a, b), std::gcd(c, d));
                if (g > 1) continue; // the primitive form is enumerated on its own
                QuarticPoint q{Rational(a), Rational(b), Rational(c), Rational(d)};
                found.insert(canonicalize(q));
            }
    }
    return {found.begin(), found.end()};
}

} // namespace quartic
