#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace hyperinv::reference {

/// One printed term of a published expansion table: square rows flattened
/// row-major, with the coefficient as printed.
struct PrintedTerm {
  int n;
  std::vector<int> square;
  std::int64_t coefficient;
};

/// A published signed-square table together with its documented errata.
/// `corrections` maps squares whose printed coefficient disagrees with
/// mechanical recomputation to the recomputed value; `missing` lists
/// classes the publication omitted entirely.  Every correction was
/// confirmed against an independent numeric contraction oracle before
/// being recorded here.
struct ExpansionTable {
  int rank;
  int order;
  std::vector<PrintedTerm> printed;
  struct Correction {
    std::vector<int> square;  // as printed
    std::int64_t printed_value;
    std::int64_t corrected_value;
  };
  std::vector<Correction> corrections;
  struct MissingClass {
    std::vector<int> square;  // canonical form
    std::int64_t coefficient;
  };
  std::vector<MissingClass> missing;
};

const std::vector<ExpansionTable>& expansion_tables();
const ExpansionTable& expansion_table(int rank, int order);

/// Published class-representative lists (squares, one per class).
struct ClassTable {
  int rank;   // row/column sum
  int order;  // n
  std::vector<std::vector<int>> squares;
  int missing_class_count;  // classes enumeration finds beyond the list
};
const std::vector<ClassTable>& class_tables();
const ClassTable& class_table(int rank, int order);

/// Published power-product tables: label-multiset string -> coefficient as
/// printed, with corrections for entries that disagree with the exact
/// multinomial (confirmed by brute-force signed enumeration).
struct PowerProductTable {
  int n;
  int k;
  std::vector<std::pair<std::string, std::int64_t>> printed;
  struct Correction {
    std::string label;
    std::int64_t printed_value;
    std::int64_t corrected_value;
  };
  std::vector<Correction> corrections;
};
const std::vector<PowerProductTable>& power_product_tables();
const PowerProductTable& power_product_table(int n, int k);

/// Signed census of permutations by reduced cycle label, published for
/// n <= 6: label string -> signed count.
const std::vector<std::pair<std::string, std::int64_t>>& census_table(int n);

/// Published partition counts p(0..9).
const std::vector<std::int64_t>& partition_count_reference();

/// Published class-count series values (1, 1, 3, 9, 36) plus the
/// independently recomputed continuation.
const std::vector<std::int64_t>& rank4_series_reference();

/// The published-but-wrong total count of 4x4 squares with line sums 4.
inline constexpr std::int64_t kReportedH44 = 7558;
/// The published class count at (n, r) = (4, 4); enumeration gives 43.
inline constexpr std::int64_t kReportedClasses44 = 40;

}  // namespace hyperinv::reference
