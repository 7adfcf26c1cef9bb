#pragma once

// Family sweeps: one row per instance with the computed ground truth next to
// the closed-form expectation it is compared against.

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace coverlab {

enum class RowStatus { Match, Mismatch, Flagged, NotApplicable, Skipped };

std::string_view status_name(RowStatus s);

/// Ranges; zero means "use the default of the chosen check".
struct SweepOptions {
  std::size_t n_min = 0;
  std::size_t n_max = 0;
  std::size_t s_max = 0;
  std::size_t m_max = 0;
  std::size_t max_vertices = 0;  // whisker bases
};

struct SweepTable {
  std::string check;
  std::vector<std::string> columns;  // last column is always "status"
  std::vector<std::vector<std::string>> rows;
  std::vector<RowStatus> status;

  std::size_t count(RowStatus s) const;
  bool any_mismatch() const { return count(RowStatus::Mismatch) > 0; }
};

/// Known checks: quasicirculant, circ-freiman, equipath, two-cliques,
/// whisker-spread, whisker-freiman, trees. Throws InputError otherwise.
SweepTable run_sweep(std::string_view check, const SweepOptions& opts = {});

std::vector<std::string> sweep_checks();

std::string to_csv(const SweepTable& t);
std::string to_text(const SweepTable& t);

}  // namespace coverlab
