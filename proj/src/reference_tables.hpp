#pragma once

#include <array>
#include <string_view>
#include <vector>

namespace heunspec::analysis {

// Published 10-significant-digit convergence tables for the l = 0 problem,
// used verbatim as reproduction targets. Table 1: alpha = -sqrt(2),
// N = 2..10. Table 2: alpha = +sqrt(2), N = 2..13. A row lists the lowest
// min(N, 4) variational eigenvalues.
struct ReferenceRow {
  int basis_n;
  std::array<std::string_view, 4> cells;  // empty entries stay unset
};

inline const std::vector<ReferenceRow>& reference_table(int which) {
  static const std::vector<ReferenceRow> table1 = {
      {2, {"4.000000000", "10.49997602", "", ""}},
      {3, {"4.000000000", "7.751061995", "19.88102859", ""}},
      {4, {"4.000000000", "7.694010921", "11.97562584", "33.92039998"}},
      {5, {"4.000000000", "7.693979367", "11.51212379", "17.05520450"}},
      {6, {"4.000000000", "7.693978905", "11.50604696", "15.46896992"}},
      {7, {"4.000000000", "7.693978892", "11.50604243", "15.37652840"}},
      {8, {"4.000000000", "7.693978891", "11.50604238", "15.37592761"}},
      {9, {"4.000000000", "7.693978891", "11.50604238", "15.37592718"}},
      {10, {"4.000000000", "7.693978891", "11.50604238", "15.37592718"}},
  };
  static const std::vector<ReferenceRow> table2 = {
      {2, {"-1.180391283", "4.000000000", "", ""}},
      {3, {"-1.401182256", "4.000000000", "9.284143096", ""}},
      {4, {"-1.449885589", "4.000000000", "8.345259771", "17.66452696"}},
      {5, {"-1.458156835", "4.000000000", "8.344361267", "12.69095166"}},
      {6, {"-1.459389344", "4.000000000", "8.344349784", "12.53313315"}},
      {7, {"-1.459560848", "4.000000000", "8.344349442", "12.53290257"}},
      {8, {"-1.459583736", "4.000000000", "8.344349427", "12.53290132"}},
      {9, {"-1.459586704", "4.000000000", "8.344349427", "12.53290130"}},
      {10, {"-1.459587081", "4.000000000", "8.344349427", "12.53290130"}},
      {11, {"-1.459587128", "4.000000000", "8.344349427", "12.53290130"}},
      {12, {"-1.459587134", "4.000000000", "8.344349427", "12.53290130"}},
      {13, {"-1.459587134", "4.000000000", "8.344349427", "12.53290130"}},
  };
  return which == 1 ? table1 : table2;
}

}  // namespace heunspec::analysis
