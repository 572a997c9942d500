#pragma once

// Exact models of the simplex category Delta, Connes' cyclic category Lambda
// and the r-cyclic categories Lambda_r.
//
// Every morphism [m] -> [n] of Lambda is a monotone function F: Z -> Z with
// F(x + m + 1) = F(x) + n + 1, taken modulo F ~ F + (n + 1).  Lambda_r uses
// the same functions modulo the weaker relation F ~ F + r(n + 1).  The cycle
// map tau_n is x -> x - 1.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <vector>

namespace cyclotome {

inline constexpr std::size_t kDefaultMorphismCap = 1'000'000;

/// Floor division for possibly negative numerators.
constexpr std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

constexpr std::int64_t floor_mod(std::int64_t a, std::int64_t b) { return a - b * floor_div(a, b); }

/// Order-preserving map [source] -> [target], stored by its values on 0..source.
struct DeltaMor {
  int source = 0;
  int target = 0;
  std::vector<int> values;

  static DeltaMor identity(int n);
  /// d^i : [n-1] -> [n], skips i.
  static DeltaMor coface(int n, int i);
  /// s^i : [n+1] -> [n], hits i twice.
  static DeltaMor codegeneracy(int n, int i);
  /// The unique map [m] -> [0].
  static DeltaMor terminal(int m);

  void validate() const;
  bool is_injective() const;
  bool is_surjective() const;
  /// Periodic extension to Z: F(x + source + 1) = F(x) + target + 1.
  std::int64_t eval(std::int64_t x) const;

  friend bool operator==(const DeltaMor&, const DeltaMor&) = default;
  friend auto operator<=>(const DeltaMor&, const DeltaMor&) = default;
};

DeltaMor compose(const DeltaMor& g, const DeltaMor& f);

/// Normal form F = delta o tau_m^rot with rot in Z/(m+1).
struct LambdaMor {
  int source = 0;
  int target = 0;
  int rot = 0;
  DeltaMor delta;

  static LambdaMor identity(int n);
  static LambdaMor from_delta(DeltaMor d);
  /// tau_n : x -> x - 1 on [n].
  static LambdaMor cycle(int n);
  /// tau_n^k for any integer k.
  static LambdaMor cycle_power(int n, std::int64_t k);
  static LambdaMor coface(int n, int i);
  static LambdaMor codegeneracy(int n, int i);
  /// The extra codegeneracy s^{n+1} : [n+1] -> [n] collapsing the arrow n+1 -> 0.
  static LambdaMor extra_codegeneracy(int n);

  void validate() const;
  /// Function model value F(x).
  std::int64_t eval(std::int64_t x) const;
  /// F(0), ..., F(source + 1); the last sample closes the period.
  std::vector<std::int64_t> samples() const;
  /// The induced map of vertex sets Z/(m+1) -> Z/(n+1).
  std::vector<int> vertex_map() const;

  friend bool operator==(const LambdaMor&, const LambdaMor&) = default;
  friend auto operator<=>(const LambdaMor&, const LambdaMor&) = default;
};

/// Canonicalizes a degree-1 function given by its samples F(0..m+1).
/// Throws InputError on non-monotone samples or a wrong period offset.
LambdaMor normal_form(int m, int n, std::span<const std::int64_t> samples);

/// g o f, computed on normal forms by commuting the cycle part past the Delta part.
LambdaMor compose(const LambdaMor& g, const LambdaMor& f);

/// Morphism of Lambda_r between relabeled objects [m] -> [n]; values F(0..m)
/// normalized so that 0 <= F(0) < r(n + 1).
struct RCyclicMor {
  int r = 1;
  int source = 0;
  int target = 0;
  std::vector<std::int64_t> values;

  static RCyclicMor identity(int r, int n);
  /// Builds from samples F(0..m+1) and renormalizes.
  static RCyclicMor from_samples(int r, int m, int n, std::span<const std::int64_t> samples);

  void validate() const;
  std::int64_t eval(std::int64_t x) const;
  std::vector<std::int64_t> samples() const;

  friend bool operator==(const RCyclicMor&, const RCyclicMor&) = default;
  friend auto operator<=>(const RCyclicMor&, const RCyclicMor&) = default;
};

RCyclicMor compose(const RCyclicMor& g, const RCyclicMor& f);

/// P_r : Lambda_r -> Lambda, reduces modulo F ~ F + (n + 1).
LambdaMor quotient_p_r(const RCyclicMor& f);

/// The same function viewed in Lambda as [r(m+1)-1] -> [r(n+1)-1].
LambdaMor as_lambda_morphism(const RCyclicMor& f);

/// The P_r-preimage of g on sheet k: the function F + k(n + 1).
RCyclicMor lift_to_rcyclic(const LambdaMor& g, int r, int sheet = 0);

/// Edgewise subdivision sd_r on Delta: each block of the domain is repeated r times.
DeltaMor sd_on_morphism(int r, const DeltaMor& phi);

/// The generator tau_{r(k+1)-1}^{k+1} of the C_r-action on level k of an r-cyclic object.
RCyclicMor rcyclic_group_generator(int r, int k);

// --- enumeration --------------------------------------------------------------------

/// |Delta([m],[n])| = C(m + n + 1, m + 1), saturating at UINT64_MAX.
std::uint64_t count_delta(int m, int n);
std::uint64_t count_lambda(int m, int n);
std::uint64_t count_rcyclic(int r, int m, int n);

/// All morphisms in lexicographic order of their normal form.
/// Throws ResourceLimitError when the hom-set exceeds cap.
std::vector<DeltaMor> enumerate_delta(int m, int n, std::size_t cap = kDefaultMorphismCap);
std::vector<LambdaMor> enumerate_lambda(int m, int n, std::size_t cap = kDefaultMorphismCap);
std::vector<RCyclicMor> enumerate_rcyclic(int r, int m, int n, std::size_t cap = kDefaultMorphismCap);

// --- generator words ----------------------------------------------------------------

struct Generator {
  enum class Kind { Face, Degeneracy, Cycle, CycleInverse };
  Kind kind = Kind::Cycle;
  int index = 0;
  int source = 0;
  int target = 0;

  static Generator face(int n, int i) { return {Kind::Face, i, n - 1, n}; }
  static Generator degeneracy(int n, int i) { return {Kind::Degeneracy, i, n + 1, n}; }
  static Generator cycle(int n) { return {Kind::Cycle, 0, n, n}; }
  static Generator cycle_inverse(int n) { return {Kind::CycleInverse, 0, n, n}; }

  LambdaMor morphism() const;
  std::string to_string() const;

  friend bool operator==(const Generator&, const Generator&) = default;
};

/// Atoms in application order: the morphism is atoms.back() o ... o atoms.front().
struct GeneratorWord {
  int source = 0;
  int target = 0;
  std::vector<Generator> atoms;

  std::string to_string() const;
};

LambdaMor evaluate(const GeneratorWord& word);

/// Canonical factorization: cycle part, then degeneracies, then faces.
GeneratorWord to_generator_word(const LambdaMor& f);

/// A second factorization of f, chosen at random: the morphism is rewritten as
/// tau_n^a o (tau_n^{-a} o f), and the Delta part's degeneracies and faces are
/// peeled off in a random admissible order.
GeneratorWord alternate_generator_word(const LambdaMor& f, std::mt19937_64& rng);

std::string to_string(const DeltaMor& f);
std::string to_string(const LambdaMor& f);
std::string to_string(const RCyclicMor& f);

}  // namespace cyclotome
