#ifndef PUSHCAT_SSET_HOMOLOGY_HPP
#define PUSHCAT_SSET_HOMOLOGY_HPP

#include <optional>
#include <string>
#include <vector>

#include "pushcat/sset/simplicial_set.hpp"
#include "pushcat/sset/smith.hpp"

namespace pushcat {

struct HomologyGroup {
  std::size_t free_rank = 0;
  /// Invariant factors >= 2, each dividing the next.
  std::vector<BigInt> torsion;

  bool is_zero() const { return free_rank == 0 && torsion.empty(); }
  friend bool operator==(const HomologyGroup&, const HomologyGroup&) = default;
};

/// H_0 .. H_{dim-1} of a truncated simplicial set.
///
/// Each reported group only needs simplices up to dim and is therefore exact.
/// `complete` records whether the groups above dim - 1 are known to vanish,
/// which holds when no nondegenerate simplices exist above dim - 1.
struct HomologyReport {
  std::size_t truncation = 0;
  std::vector<HomologyGroup> groups;
  bool complete = false;

  friend bool operator==(const HomologyReport& a, const HomologyReport& b) { return a.groups == b.groups; }
};

inline std::string to_string(const HomologyGroup& h) {
  std::string out;
  auto append = [&](const std::string& part) { out += out.empty() ? part : " + " + part; };
  if (h.free_rank == 1) append("Z");
  if (h.free_rank > 1) append("Z^" + std::to_string(h.free_rank));
  for (const auto& t : h.torsion) append("Z/" + t.str());
  return out.empty() ? "0" : out;
}

/// Ranks of the normalized chain groups and the boundary matrices
/// ∂_n : N_n -> N_{n-1} for 1 <= n <= dim.
struct NormalizedChains {
  std::vector<std::size_t> rank;
  std::vector<SparseMatrix> boundary;  // boundary[n], n >= 1
};

inline NormalizedChains normalized_chains(const TruncatedSSet& x) {
  const auto flags = x.degenerate_flags();
  std::vector<std::vector<std::int64_t>> position(x.dim + 1);
  NormalizedChains out;
  out.rank.assign(x.dim + 1, 0);
  for (std::size_t n = 0; n <= x.dim; ++n) {
    position[n].assign(x.count[n], -1);
    for (SimplexIndex s = 0; s < x.count[n]; ++s)
      if (!flags[n][s]) position[n][s] = static_cast<std::int64_t>(out.rank[n]++);
  }
  out.boundary.resize(x.dim + 1);
  for (std::size_t n = 1; n <= x.dim; ++n) {
    SparseMatrix m(out.rank[n - 1], out.rank[n]);
    for (SimplexIndex s = 0; s < x.count[n]; ++s) {
      if (position[n][s] < 0) continue;
      for (std::size_t i = 0; i <= n; ++i) {
        const std::int64_t row = position[n - 1][x.face(n, s, i)];
        if (row < 0) continue;
        m.add(static_cast<std::uint32_t>(row), static_cast<std::uint32_t>(position[n][s]), i % 2 == 0 ? 1 : -1);
      }
    }
    out.boundary[n] = std::move(m);
  }
  return out;
}

inline HomologyReport homology(const TruncatedSSet& x) {
  if (x.dim < 1) throw Error(ErrorCode::TruncationTooLow, "homology needs at least the 1-simplices");
  const NormalizedChains chains = normalized_chains(x);
  std::vector<std::vector<BigInt>> factors(x.dim + 1);
  for (std::size_t n = 1; n <= x.dim; ++n) factors[n] = invariant_factors(chains.boundary[n]);
  HomologyReport report;
  report.truncation = x.dim;
  for (std::size_t n = 0; n < x.dim; ++n) {
    HomologyGroup h;
    const std::size_t rank_out = n == 0 ? 0 : factors[n].size();
    h.free_rank = chains.rank[n] - rank_out - factors[n + 1].size();
    for (const auto& f : factors[n + 1])
      if (f > 1) h.torsion.push_back(f);
    report.groups.push_back(std::move(h));
  }
  report.complete = x.top_nondegenerate && *x.top_nondegenerate + 1 <= x.dim;
  return report;
}

/// Euler characteristic from nondegenerate simplex counts through dim.
inline long long euler_characteristic(const TruncatedSSet& x) {
  long long chi = 0;
  const auto counts = x.nondegenerate_counts();
  for (std::size_t n = 0; n <= x.dim; ++n) chi += (n % 2 == 0 ? 1 : -1) * static_cast<long long>(counts[n]);
  return chi;
}

enum class ContractibilityVerdict { ContractibleUpTo, NotContractible };

struct ContractibilityReport {
  ContractibilityVerdict verdict = ContractibilityVerdict::NotContractible;
  std::size_t truncation = 0;
  /// H_1 as the abelianized π1 shadow.
  HomologyGroup h1;
  std::string reason;

  explicit operator bool() const { return verdict == ContractibilityVerdict::ContractibleUpTo; }
};

/// Connected with vanishing reduced homology through degree truncation - 1.
/// Never claims more than that.
inline ContractibilityReport is_weakly_contractible_up_to(const TruncatedSSet& x, const HomologyReport& report) {
  if (x.dim < 2) throw Error(ErrorCode::TruncationTooLow, "contractibility check needs at least the 2-simplices");
  ContractibilityReport out;
  out.truncation = report.truncation;
  out.h1 = report.groups.size() > 1 ? report.groups[1] : HomologyGroup{};
  const HomologyGroup& h0 = report.groups[0];
  if (x.count[0] == 0) {
    out.reason = "empty";
    return out;
  }
  if (h0.free_rank != 1) {
    out.reason = std::to_string(h0.free_rank) + " components";
    return out;
  }
  for (std::size_t n = 1; n < report.groups.size(); ++n)
    if (!report.groups[n].is_zero()) {
      out.reason = "H_" + std::to_string(n) + " = " + to_string(report.groups[n]);
      return out;
    }
  out.verdict = ContractibilityVerdict::ContractibleUpTo;
  out.reason = "connected, reduced homology vanishes through degree " + std::to_string(report.truncation - 1);
  return out;
}

inline ContractibilityReport is_weakly_contractible_up_to(const TruncatedSSet& x) {
  if (x.dim < 2) throw Error(ErrorCode::TruncationTooLow, "contractibility check needs at least the 2-simplices");
  return is_weakly_contractible_up_to(x, homology(x));
}

}  // namespace pushcat

#endif  // PUSHCAT_SSET_HOMOLOGY_HPP
