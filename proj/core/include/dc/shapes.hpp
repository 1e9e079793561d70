#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace dc {

// Finitely supported sequence of naturals, stored without trailing zeros.
class Composition {
 public:
  Composition() = default;
  Composition(std::initializer_list<int> parts);
  explicit Composition(std::vector<int> parts);

  int operator[](std::size_t i) const { return i < p_.size() ? p_[i] : 0; }
  std::size_t length() const { return p_.size(); }
  const std::vector<int>& parts() const { return p_; }
  int size() const;  // sum of parts
  bool empty() const { return p_.empty(); }

  // Parts padded (or cut) to exactly n entries.
  std::vector<int> padded(std::size_t n) const;
  std::string str() const;

  bool operator==(const Composition&) const = default;
  auto operator<=>(const Composition&) const = default;

 protected:
  std::vector<int> p_;
};

class Partition : public Composition {
 public:
  Partition() = default;
  Partition(std::initializer_list<int> parts);
  explicit Partition(std::vector<int> parts);
  explicit Partition(const Composition& c);

  static bool is_partition(const std::vector<int>& parts);
};

Composition operator+(const Composition& a, const Composition& b);
// Pointwise difference; throws precondition_error on a negative part.
Composition operator-(const Composition& a, const Composition& b);

Partition conjugate(const Partition& lambda);

enum class Strip { horizontal, vertical };

// alpha <=h beta iff beta[i+1] <= alpha[i] <= beta[i] for all i; the vertical
// test is the same on conjugates.
bool strip_le(const Composition& alpha, const Composition& beta, Strip kind);

// (lambda[k-1], ..., lambda[0]); requires lambda[k] == 0.
Composition revert(const Partition& lambda, std::size_t k);

bool contains(const Partition& outer, const Partition& inner);

struct SkewShape {
  Partition outer;
  Partition inner;

  SkewShape() = default;
  SkewShape(Partition o, Partition i = {});

  int size() const { return outer.size() - inner.size(); }
  // Cells (row, col) in row-major order.
  std::vector<std::pair<int, int>> cells() const;
  bool has(int r, int c) const;
  std::string str() const;
  bool operator==(const SkewShape&) const = default;
};

// All partitions of n, in reverse lexicographic order.
std::vector<Partition> partitions_of(int n);
// All partitions contained in lambda.
std::vector<Partition> subpartitions(const Partition& lambda);
// All skew shapes lambda/kappa with |lambda| <= n.
std::vector<SkewShape> skew_shapes_up_to(int n);

enum class Flavor { sst, transpose_sst, reverse_sst, reverse_transpose_sst };

const char* flavor_name(Flavor f);
bool is_reverse(Flavor f);
bool is_transpose(Flavor f);

// A tableau as a chain of partitions. Forward flavors grow along the chain,
// reverse flavors shrink. Only the prefix up to the stable value is stored.
struct Tableau {
  Flavor flavor = Flavor::sst;
  std::vector<Partition> chain;

  bool valid() const;
  SkewShape shape() const;
  bool straight() const { return shape().inner.empty(); }
  // Drops trailing repetitions of the stable member.
  Tableau normalized() const;
  bool operator==(const Tableau& o) const;
};

Composition tableau_weight(const Tableau& t);

// Row-wise display: rows[r] lists entries of row r starting at column inner[r].
struct Display {
  Partition inner;
  std::vector<std::vector<int>> rows;
  bool operator==(const Display&) const = default;
};

Display to_display(const Tableau& t);
// Builds the chain from a display; throws precondition_error when the
// display is not a tableau of the given flavor.
Tableau from_display(Flavor f, const Display& d);

// Text forms: "8,8,5,3,1" (empty is "0"); skew "9,8,5,5,3/4,1".
Partition parse_partition(const std::string& s);
Composition parse_composition(const std::string& s);
SkewShape parse_skew(const std::string& s);

}  // namespace dc
