#pragma once

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "dc/matrices.hpp"

namespace dc {

// Implicit shape: the partition of the normal form of m.
Partition implicit_shape(const BinaryMatrix& m);
Partition implicit_shape(const IntegralMatrix& m);

struct BurgeStep {
  std::size_t i;
  int d;
  int kappa_i;
  int c;
};

// Burge shape datum. Corner convention for a unit square: lambda is the
// corner of the smallest submatrix, mu and nu its two neighbours and kappa
// the opposite corner; m is the entry in the square.
Partition burge_forward(const Partition& lambda, const Partition& mu, const Partition& nu, int m,
                        std::vector<BurgeStep>* trace = nullptr);
std::pair<Partition, int> burge_backward(const Partition& mu, const Partition& nu,
                                         const Partition& kappa,
                                         std::vector<BurgeStep>* trace = nullptr);

// RSK shape datum in closed form.
Partition rsk_forward(const Partition& lambda, const Partition& mu, const Partition& nu, int m);
std::pair<Partition, int> rsk_backward(const Partition& mu, const Partition& nu,
                                       const Partition& kappa);

enum class DualFlavor { row_insertion, col_insertion };

// Binary shape data (lambda <=v mu, lambda <=h nu) via the optional-square
// sets S and T and their matching.
Partition dual_forward(const Partition& lambda, const Partition& mu, const Partition& nu, int bit,
                       DualFlavor flavor);
std::pair<Partition, int> dual_backward(const Partition& mu, const Partition& nu,
                                        const Partition& kappa, DualFlavor flavor);

enum class Corner { NW, NE, SW, SE };

const char* corner_name(Corner c);
Corner parse_corner(const std::string& s);

// grid[i][j] for 0 <= i <= k, 0 <= j <= l is the implicit shape of the
// orientation's corner submatrix: NW [[i]]x[[j]], NE [[i]]x(N-[[j]]),
// SW (N-[[i]])x[[j]], SE (N-[[i]])x(N-[[j]]).
struct GrowthDiagram {
  Corner orientation = Corner::NW;
  Mode mode = Mode::integral;
  std::size_t k = 0, l = 0;
  std::vector<std::vector<Partition>> grid;
  std::vector<std::vector<int>> entries;  // k x l source matrix

  const Partition& at(std::size_t i, std::size_t j) const { return grid[i][j]; }
};

// Built purely from local rules; with verify set every cell is also checked
// against direct normalization (std::logic_error on mismatch). Binary: row
// insertion datum for NW and SE, column insertion for NE and SW. Integral:
// Burge for NW and SE, RSK for NE and SW.
GrowthDiagram growth_diagram(const BinaryMatrix& m, Corner c, bool verify = false);
GrowthDiagram growth_diagram(const IntegralMatrix& m, Corner c, bool verify = false);

// Direct computation of every cell by normalization.
GrowthDiagram direct_diagram(const BinaryMatrix& m, Corner c);
GrowthDiagram direct_diagram(const IntegralMatrix& m, Corner c);

// Text rendering: point (i,j) shows M[i-1,j-1] (for i,j >= 1) and its
// shape; empty shapes print as "()".
std::string render(const GrowthDiagram& g);

// French normal form: bit (i,j) is set iff (k-1-i, j) lies in the diagram.
BinaryMatrix french_form(const Partition& lambda, std::size_t k);
std::optional<Partition> recognize_french(const BinaryMatrix& m, std::size_t k);

// Sliced form: [i>=k][j<l] (lambda[m-1] - lambda[m]) with m = i-k-j+l.
IntegralMatrix sliced_form(const Partition& lambda, std::size_t k, std::size_t l);
std::optional<Partition> recognize_sliced(const IntegralMatrix& m, std::size_t k, std::size_t l);

}  // namespace dc
