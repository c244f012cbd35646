// verify.hpp
// Self-verification sweeps: the counting routes against each other and
// against brute force, and multiplier equivalence against the exact
// isomorphism oracle.

#pragma once

#include <algorithm>
#include <exception>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "baseline.hpp"
#include "config.hpp"
#include "counting.hpp"
#include "iso.hpp"
#include "residue_ring.hpp"

namespace cyclconf {

/// Outcome of comparing the AGL_1(v) orbit partition of B_con(v,k) with the
/// partition induced by exact isomorphism.
struct PartitionCheck {
    std::size_t classes = 0;
    std::size_t members_checked = 0;  // slice members compared with their representative
    std::size_t pairs_checked = 0;    // representative pairs compared
    std::size_t mismatches = 0;
    std::vector<std::string> details;
};

/// Both relations are equivalence relations invariant under AGL_1(v), so
/// they induce the same partition iff every member of the translation slice
/// is isomorphic to its canonical representative and distinct
/// representatives are pairwise non-isomorphic.
inline PartitionCheck compare_iso_partitions(const Modulus& m, std::size_t k, std::uint64_t cap) {
    PartitionCheck out;
    const auto unit_list = units(m);
    std::map<ResidueSet, CyclicConfiguration> reps;
    for (const auto& b : enumerate_base_lines(m, k, true, cap)) {
        auto canon = detail::canonical_set(b.elements(), m, unit_list);
        auto it = reps.find(canon);
        if (it == reps.end()) it = reps.emplace(canon, CyclicConfiguration(BaseLine(m, canon))).first;
        const CyclicConfiguration member(b);
        ++out.members_checked;
        const bool mult = multiplier_equivalent(member, it->second).has_value();
        const auto exact = exact_isomorphic(member, it->second, cap);
        const bool exact_ok = exact && verify_witness(member, it->second, *exact);
        if (!mult || !exact_ok) {
            ++out.mismatches;
            out.details.push_back("member {" + format_residues(b.elements()) + "} vs rep {" +
                                  format_residues(canon) + "}");
        }
    }
    out.classes = reps.size();
    for (auto i = reps.begin(); i != reps.end(); ++i) {
        for (auto j = std::next(i); j != reps.end(); ++j) {
            ++out.pairs_checked;
            const bool mult = multiplier_equivalent(i->second, j->second).has_value();
            const bool exact = exact_isomorphic(i->second, j->second, cap).has_value();
            if (mult || exact) {
                ++out.mismatches;
                out.details.push_back("reps {" + format_residues(i->first) + "} and {" +
                                      format_residues(j->first) + "} exact=" + (exact ? "iso" : "non-iso"));
            }
        }
    }
    return out;
}

/// One row of the counting sweep.
struct SweepRow {
    std::uint64_t v = 0;
    std::optional<std::int64_t> formula;
    std::optional<std::int64_t> sum;
    std::optional<std::int64_t> orbits;
    std::optional<bool> burnside_ok;  // sum_l N(v,k,l) = k phi(v) orbits
    std::optional<bool> per_unit_ok;    // closed N(v,3,l) = brute force, every unit l
    std::optional<PartitionCheck> oracle;
    bool ok = true;
};

inline SweepRow sweep_value(std::uint64_t v, std::size_t k, std::uint64_t cap, bool oracle) {
    SweepRow row;
    row.v = v;
    const Modulus m(v);
    if (k == 3 && v > 4) {
        row.formula = count_formula(v);
        row.sum = count_sum(v);
        row.ok = row.ok && *row.formula == *row.sum;
    }
    if (v <= cap) {
        row.orbits = count_orbits(v, k, cap);
        if (row.formula) row.ok = row.ok && *row.orbits == *row.formula;
        std::int64_t total = 0;
        bool per_unit = true;
        for (const auto& [l, brute] : n_vkl_table(v, k, cap)) {
            total += brute;
            if (k == 3 && v > 4) per_unit = per_unit && brute == n_v3_l(v, l);
        }
        row.burnside_ok = total == static_cast<std::int64_t>(k * phi(m)) * *row.orbits;
        row.ok = row.ok && *row.burnside_ok;
        if (k == 3 && v > 4) {
            row.per_unit_ok = per_unit;
            row.ok = row.ok && per_unit;
        }
        if (oracle) {
            row.oracle = compare_iso_partitions(m, k, cap);
            row.ok = row.ok && row.oracle->mismatches == 0;
        }
    }
    return row;
}

/// Runs sweep_value over [lo, hi] on worker threads; rows come back in v order.
inline std::vector<SweepRow> sweep(std::uint64_t lo, std::uint64_t hi, std::size_t k, std::uint64_t cap, bool oracle,
                                   unsigned workers = std::thread::hardware_concurrency()) {
    std::vector<SweepRow> rows(hi >= lo ? hi - lo + 1 : 0);
    workers = std::max(1U, std::min<unsigned>(workers, static_cast<unsigned>(rows.size())));
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(workers);
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            try {
                for (std::size_t i = w; i < rows.size(); i += workers) rows[i] = sweep_value(lo + i, k, cap, oracle);
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    }
    for (auto& t : pool) t.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    return rows;
}

}  // namespace cyclconf
