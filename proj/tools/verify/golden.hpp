#pragma once

// Worked example data: the running tableau T, its encodings and everything
// derived from them.

#include <string>
#include <vector>

#include "dc/matrices.hpp"
#include "dc/shapes.hpp"
#include "dc/text_io.hpp"

namespace golden {

inline const char* kT = "4:0,2,4,5,5|1:0,1,3,4,6,6,6|0:1,1,2,4,5|0:2,3,4,6,6|0:5,6,6";
inline const char* kS = "0,0,1,2,4,4,5,5|1,1,3,4,5,6,6,6|2,2,4,6,6|3,6,6|5";
inline const char* kL = "4:0,0,0,0,0|1:0,0,1,1,1,1,1|0:0,1,1,2,2|0:1,2,2,3,3|0:2,3,4";
inline const char* kLbar = "0,0,0,0,0,1,1,2|1,1,1,1,1,2,2,3|2,2,3,3,4|3,3,4|4";
inline const char* kLbarStar = "4,4,4,3,3,1,1,1|3,3,3,2,2,0,0,0|2,2,2,1,1|1,1,0|0";
inline const char* kR = "8,7,6,5,4,2,1,0|7,6,5,4,3,2,1,0|4,3,2,1,0|4,3,1|2";
inline const char* kRStar = "0,1,2,3,4,5,6,7|0,1,2,3,4,6,7,8|0,1,2,3,4|1,2,5|4";
inline const char* kSStarRot =
    "7:0|5:0,1,2|3:1,1,2,3,4|0:2,3,4,4,4,5,5,5|0:5,6,6,6,6,6,6,6";

inline const char* kBinM =
    "0 1 0 0 1 0 0 0 0\n"
    "1 1 1 0 0 0 0 0 0\n"
    "1 0 1 0 0 1 0 0 0\n"
    "0 1 0 1 0 0 0 0 0\n"
    "0 0 1 1 1 0 1 0 0\n"
    "1 0 0 0 1 0 0 1 1\n"
    "0 1 1 1 1 1 1 1 0\n";
inline const char* kBinP =
    "1 1 1 0 1 1 1 1 1\n"
    "1 1 1 1 1 1 1 1 0\n"
    "1 1 1 1 1 0 0 0 0\n"
    "0 1 0 1 1 0 0 0 0\n"
    "0 0 1 0 0 0 0 0 0\n";
inline const char* kBinQ =
    "1 1 0 0 0 0 0 0 0\n"
    "1 1 1 0 0 0 0 0 0\n"
    "1 1 0 1 0 0 0 0 0\n"
    "1 0 1 0 0 0 0 0 0\n"
    "0 0 1 1 1 1 0 0 0\n"
    "1 0 0 0 1 0 1 1 0\n"
    "0 1 1 1 1 1 1 1 0\n";
inline const char* kBinN =
    "1 1 1 1 1 1 1 1\n"
    "1 1 1 1 1 1 1 1\n"
    "1 1 1 1 1\n"
    "1 1 1\n"
    "1\n";

inline const char* kIntM =
    "1 0 1 0 1 2 0\n"
    "1 1 0 1 1 0 3\n"
    "0 2 1 0 1 1 0\n"
    "0 0 1 1 1 0 2\n"
    "0 0 0 0 0 1 2\n";
inline const char* kIntP =
    "2 1 1 0 2 2 0\n"
    "0 2 0 1 1 1 3\n"
    "0 0 2 0 1 0 2\n"
    "0 0 0 1 0 0 2\n"
    "0 0 0 0 0 1 0\n";
inline const char* kIntQ =
    "5 0 0 0 0 0 0\n"
    "2 5 0 0 0 0 0\n"
    "1 2 2 0 0 0 0\n"
    "0 1 2 2 0 0 0\n"
    "0 0 1 1 1 0 0\n";
inline const char* kIntN =
    "8\n"
    "0 8\n"
    "0 0 5\n"
    "0 0 0 3\n"
    "0 0 0 0 1\n";

// Exhausting downward moves on the binary M (bound 7).
inline const char* kBinPTilde =
    "0 0 0 0 0 0 0 0 0\n"
    "0 0 0 0 0 0 0 0 0\n"
    "0 0 0 0 1 0 0 0 0\n"
    "0 1 1 0 0 1 0 0 0\n"
    "1 1 1 1 1 0 0 0 0\n"
    "1 1 1 1 1 0 1 1 1\n"
    "1 1 1 1 1 1 1 1 0\n";
// Exhausting rightward moves on the integral M.
inline const char* kIntQTilde =
    "0 0 1 1 0 3 0\n"
    "0 0 0 2 2 0 3\n"
    "0 0 0 0 3 2 0\n"
    "0 0 0 0 0 3 2\n"
    "0 0 0 0 0 0 3\n";
// Exhausting downward moves on the integral P (k = 5).
inline const char* kIntPTilde =
    "1 0 0 0 0 0 0\n"
    "1 1 1 0 0 0 0\n"
    "0 2 1 1 1 0 0\n"
    "0 0 1 1 3 3 0\n"
    "0 0 0 0 0 1 7\n";

// Growth diagram grids, one line per grid row, shapes separated by spaces
// ("0" is the empty partition).
inline const std::vector<std::string> kGrowthIntNW = {
    "0 0 0 0 0 0 0 0",
    "0 1 1 2 2 3 5 5",
    "0 2 2,1 3,1 3,2 5,2 7,2 7,5",
    "0 2 3,2 4,2,1 4,3,1 6,3,2 8,4,2 8,7,2",
    "0 2 3,2 4,2,2 4,3,2,1 6,4,3,1 8,5,3,1 8,8,4,2",
    "0 2 3,2 4,2,2 4,3,2,1 6,4,3,1 8,5,3,1,1 8,8,5,3,1",
};
inline const std::vector<std::string> kGrowthBinNW = {
    "0 0 0 0 0 0 0 0 0 0",
    "0 0 1 1 1 2 2 2 2 2",
    "0 1 2,1 3,1 3,1 3,2 3,2 3,2 3,2 3,2",
    "0 1,1 2,1,1 3,2,1 3,2,1 3,2,2 4,2,2 4,2,2 4,2,2 4,2,2",
    "0 1,1 2,2,1 3,2,2 4,2,2 4,2,2,1 4,3,2,1 4,3,2,1 4,3,2,1 4,3,2,1",
    "0 1,1 2,2,1 3,3,2 4,4,2 5,4,2,1 5,4,3,1 6,4,3,1 6,4,3,1 6,4,3,1",
    "0 1,1,1 2,2,1,1 3,3,2,1 4,4,2,1 5,5,2,1,1 5,5,3,1,1 6,5,3,1,1 7,5,3,1,1 8,5,3,1,1",
    "0 1,1,1 2,2,2,1 3,3,3,2 4,4,4,2 5,5,5,2,1 6,5,5,3,1 7,6,5,3,1 8,7,5,3,1 8,8,5,3,1",
};
inline const std::vector<std::string> kGrowthBinNE = {
    "0 0 0 0 0 0 0 0 0 0",
    "2 2 1 1 1 0 0 0 0 0",
    "3,2 2,2 1,1 1 1 0 0 0 0 0",
    "4,2,2 3,2,1 2,1,1 2 2 1 0 0 0 0",
    "4,3,2,1 3,3,1,1 2,2,1 2,1 2 1 0 0 0 0",
    "6,4,3,1 5,3,3,1 4,2,2,1 3,2,1 3,1 2 1 0 0 0",
    "8,5,3,1,1 7,4,3,1 6,3,2,1 5,2,2 5,1,1 4 3 2 1 0",
    "8,8,5,3,1 7,7,4,3,1 6,6,3,2,1 5,5,2,2 5,4,1,1 4,3 3,2 2,1 1 0",
};
inline const std::vector<std::string> kGrowthIntSW = {
    "0 2 3,2 4,2,2 4,3,2,1 6,4,3,1 8,5,3,1,1 8,8,5,3,1",
    "0 1 3,1 3,2,1 4,2,2 5,4,2 5,5,2,1 8,5,5,2",
    "0 0 2 3,1 3,2 4,3 5,3,1 5,5,3",
    "0 0 0 1 2 3 3,1 5,3",
    "0 0 0 0 0 0 1 3",
    "0 0 0 0 0 0 0 0",
};

inline std::vector<std::vector<dc::Partition>> parse_grid(const std::vector<std::string>& rows) {
  std::vector<std::vector<dc::Partition>> g;
  for (const auto& r : rows) {
    std::vector<dc::Partition> row;
    std::size_t start = 0;
    while (start < r.size()) {
      std::size_t sp = r.find(' ', start);
      if (sp == std::string::npos) sp = r.size();
      row.push_back(dc::parse_partition(r.substr(start, sp - start)));
      start = sp + 1;
    }
    g.push_back(row);
  }
  return g;
}

inline dc::Tableau tableau(dc::Flavor f, const char* display) {
  return dc::from_display(f, dc::parse_display(display));
}

inline dc::BinaryMatrix bin(const char* text) { return dc::parse_matrix<dc::binary_tag>(text); }
inline dc::IntegralMatrix integ(const char* text) {
  return dc::parse_matrix<dc::integral_tag>(text);
}

}  // namespace golden
