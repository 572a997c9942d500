#include "cyclotome/lambda.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include "cyclotome/error.hpp"

namespace cyclotome {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw InputError(what);
}

void require_cap(std::uint64_t count, std::size_t cap, const char* what) {
  if (count > cap) {
    throw ResourceLimitError(std::string(what) + ": hom-set has " + std::to_string(count) +
                             " morphisms, cap is " + std::to_string(cap));
  }
}

// F(x) from samples F(0..m) of a function with F(x + m + 1) = F(x) + n + 1.
std::int64_t periodic(std::span<const std::int64_t> first_period, int m, int n, std::int64_t x) {
  const std::int64_t q = floor_div(x, m + 1);
  return first_period[static_cast<std::size_t>(x - q * (m + 1))] + q * (n + 1);
}

void check_degree_one(int m, int n, std::span<const std::int64_t> samples) {
  require(m >= 0 && n >= 0, "levels must be non-negative");
  require(samples.size() == static_cast<std::size_t>(m) + 2,
          "expected " + std::to_string(m + 2) + " samples F(0..m+1), got " +
              std::to_string(samples.size()));
  for (std::size_t i = 1; i < samples.size(); ++i) {
    require(samples[i - 1] <= samples[i], "samples are not monotone at position " + std::to_string(i));
  }
  require(samples[static_cast<std::size_t>(m) + 1] - samples[0] == n + 1,
          "wrong period offset: F(m+1) - F(0) must equal n + 1");
}

void generate_monotone(int length, int lo, int hi, std::vector<int>& prefix,
                       std::vector<std::vector<int>>& out) {
  if (static_cast<int>(prefix.size()) == length) {
    out.push_back(prefix);
    return;
  }
  const int start = prefix.empty() ? lo : prefix.back();
  for (int v = start; v <= hi; ++v) {
    prefix.push_back(v);
    generate_monotone(length, lo, hi, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

// --- DeltaMor --------------------------------------------------------------------------

DeltaMor DeltaMor::identity(int n) {
  DeltaMor f{n, n, {}};
  for (int i = 0; i <= n; ++i) f.values.push_back(i);
  return f;
}

DeltaMor DeltaMor::coface(int n, int i) {
  require(n >= 1 && i >= 0 && i <= n, "coface d^i needs 0 <= i <= n, n >= 1");
  DeltaMor f{n - 1, n, {}};
  for (int x = 0; x < n; ++x) f.values.push_back(x < i ? x : x + 1);
  return f;
}

DeltaMor DeltaMor::codegeneracy(int n, int i) {
  require(n >= 0 && i >= 0 && i <= n, "codegeneracy s^i needs 0 <= i <= n");
  DeltaMor f{n + 1, n, {}};
  for (int x = 0; x <= n + 1; ++x) f.values.push_back(x <= i ? x : x - 1);
  return f;
}

DeltaMor DeltaMor::terminal(int m) { return DeltaMor{m, 0, std::vector<int>(static_cast<std::size_t>(m) + 1, 0)}; }

void DeltaMor::validate() const {
  require(source >= 0 && target >= 0, "levels must be non-negative");
  require(values.size() == static_cast<std::size_t>(source) + 1, "DeltaMor needs source + 1 values");
  for (std::size_t i = 0; i < values.size(); ++i) {
    require(values[i] >= 0 && values[i] <= target, "DeltaMor value out of range");
    if (i > 0) require(values[i - 1] <= values[i], "DeltaMor is not order preserving");
  }
}

bool DeltaMor::is_injective() const {
  return std::adjacent_find(values.begin(), values.end()) == values.end();
}

bool DeltaMor::is_surjective() const {
  if (values.front() != 0 || values.back() != target) return false;
  for (std::size_t i = 1; i < values.size(); ++i) {
    if (values[i] - values[i - 1] > 1) return false;
  }
  return true;
}

std::int64_t DeltaMor::eval(std::int64_t x) const {
  const std::int64_t q = floor_div(x, source + 1);
  return values[static_cast<std::size_t>(x - q * (source + 1))] + q * (target + 1);
}

DeltaMor compose(const DeltaMor& g, const DeltaMor& f) {
  require(f.target == g.source, "compose: level mismatch");
  DeltaMor h{f.source, g.target, {}};
  h.values.reserve(f.values.size());
  for (int v : f.values) h.values.push_back(g.values[static_cast<std::size_t>(v)]);
  return h;
}

// --- LambdaMor -------------------------------------------------------------------------

LambdaMor LambdaMor::identity(int n) { return LambdaMor{n, n, 0, DeltaMor::identity(n)}; }

LambdaMor LambdaMor::from_delta(DeltaMor d) {
  const int s = d.source;
  const int t = d.target;
  return LambdaMor{s, t, 0, std::move(d)};
}

LambdaMor LambdaMor::cycle(int n) { return cycle_power(n, 1); }

LambdaMor LambdaMor::cycle_power(int n, std::int64_t k) {
  require(n >= 0, "level must be non-negative");
  return LambdaMor{n, n, static_cast<int>(floor_mod(k, n + 1)), DeltaMor::identity(n)};
}

LambdaMor LambdaMor::coface(int n, int i) { return from_delta(DeltaMor::coface(n, i)); }

LambdaMor LambdaMor::codegeneracy(int n, int i) { return from_delta(DeltaMor::codegeneracy(n, i)); }

LambdaMor LambdaMor::extra_codegeneracy(int n) {
  std::vector<std::int64_t> s;
  for (int x = 0; x <= n + 1; ++x) s.push_back(x);
  s.push_back(n + 1);
  return normal_form(n + 1, n, s);
}

void LambdaMor::validate() const {
  delta.validate();
  require(delta.source == source && delta.target == target, "LambdaMor levels disagree with delta");
  require(rot >= 0 && rot <= source, "LambdaMor rotation out of range");
}

std::int64_t LambdaMor::eval(std::int64_t x) const { return delta.eval(x - rot); }

std::vector<std::int64_t> LambdaMor::samples() const {
  std::vector<std::int64_t> s;
  s.reserve(static_cast<std::size_t>(source) + 2);
  for (int x = 0; x <= source + 1; ++x) s.push_back(eval(x));
  return s;
}

std::vector<int> LambdaMor::vertex_map() const {
  std::vector<int> v;
  for (int x = 0; x <= source; ++x) v.push_back(static_cast<int>(floor_mod(eval(x), target + 1)));
  return v;
}

LambdaMor normal_form(int m, int n, std::span<const std::int64_t> samples) {
  check_degree_one(m, n, samples);
  const std::int64_t period = n + 1;
  // The block index floor(F(x)/(n+1)) rises by exactly one per period; the
  // rotation is the position of that rise.
  int rise = -1;
  for (int x = 1; x <= m + 1; ++x) {
    if (floor_div(samples[static_cast<std::size_t>(x)], period) >
        floor_div(samples[static_cast<std::size_t>(x) - 1], period)) {
      rise = x;
      break;
    }
  }
  require(rise >= 1, "degree-1 function without a block boundary");
  const int j = rise % (m + 1);
  const std::int64_t base = floor_div(samples[static_cast<std::size_t>(j)], period) * period;
  const auto first = samples.first(static_cast<std::size_t>(m) + 1);
  LambdaMor f{m, n, j, DeltaMor{m, n, {}}};
  for (int y = 0; y <= m; ++y) {
    const std::int64_t v = periodic(first, m, n, y + j) - base;
    require(v >= 0 && v <= n, "samples do not describe a degree-1 map");
    f.delta.values.push_back(static_cast<int>(v));
  }
  return f;
}

LambdaMor compose(const LambdaMor& g, const LambdaMor& f) {
  require(f.target == g.source, "compose: level mismatch (" + std::to_string(f.target) + " vs " +
                                    std::to_string(g.source) + ")");
  const int m = f.source;
  const int n = f.target;
  const int jg = g.rot;
  const auto& df = f.delta.values;
  // tau_n^{jg} o delta_f = delta' o tau_m^{c}
  const int c = static_cast<int>(std::count_if(df.begin(), df.end(), [jg](int v) { return v < jg; }));
  DeltaMor moved{m, n, {}};
  moved.values.reserve(df.size());
  for (int y = 0; y <= m; ++y) {
    if (y + c <= m) {
      moved.values.push_back(df[static_cast<std::size_t>(y + c)] - jg);
    } else {
      moved.values.push_back(df[static_cast<std::size_t>(y + c - m - 1)] + n + 1 - jg);
    }
  }
  return LambdaMor{m, g.target, (c + f.rot) % (m + 1), compose(g.delta, moved)};
}

// --- RCyclicMor ------------------------------------------------------------------------

RCyclicMor RCyclicMor::identity(int r, int n) {
  RCyclicMor f{r, n, n, {}};
  for (int x = 0; x <= n; ++x) f.values.push_back(x);
  return f;
}

RCyclicMor RCyclicMor::from_samples(int r, int m, int n, std::span<const std::int64_t> samples) {
  require(r >= 1, "r must be at least 1");
  check_degree_one(m, n, samples);
  const std::int64_t modulus = static_cast<std::int64_t>(r) * (n + 1);
  const std::int64_t shift = floor_div(samples[0], modulus) * modulus;
  RCyclicMor f{r, m, n, {}};
  for (int x = 0; x <= m; ++x) f.values.push_back(samples[static_cast<std::size_t>(x)] - shift);
  return f;
}

void RCyclicMor::validate() const {
  require(r >= 1, "r must be at least 1");
  require(values.size() == static_cast<std::size_t>(source) + 1, "RCyclicMor needs source + 1 values");
  require(values[0] >= 0 && values[0] < static_cast<std::int64_t>(r) * (target + 1),
          "RCyclicMor not normalized");
  auto s = samples();
  check_degree_one(source, target, s);
}

std::int64_t RCyclicMor::eval(std::int64_t x) const { return periodic(values, source, target, x); }

std::vector<std::int64_t> RCyclicMor::samples() const {
  std::vector<std::int64_t> s(values.begin(), values.end());
  s.push_back(values[0] + target + 1);
  return s;
}

RCyclicMor compose(const RCyclicMor& g, const RCyclicMor& f) {
  require(f.r == g.r, "compose: r mismatch");
  require(f.target == g.source, "compose: level mismatch");
  std::vector<std::int64_t> s;
  for (int x = 0; x <= f.source + 1; ++x) s.push_back(g.eval(f.eval(x)));
  return RCyclicMor::from_samples(f.r, f.source, g.target, s);
}

LambdaMor quotient_p_r(const RCyclicMor& f) {
  auto s = f.samples();
  return normal_form(f.source, f.target, s);
}

LambdaMor as_lambda_morphism(const RCyclicMor& f) {
  const int big_m = f.r * (f.source + 1) - 1;
  const int big_n = f.r * (f.target + 1) - 1;
  std::vector<std::int64_t> s;
  s.reserve(static_cast<std::size_t>(big_m) + 2);
  for (int x = 0; x <= big_m + 1; ++x) s.push_back(f.eval(x));
  return normal_form(big_m, big_n, s);
}

RCyclicMor lift_to_rcyclic(const LambdaMor& g, int r, int sheet) {
  auto s = g.samples();
  for (auto& v : s) v += static_cast<std::int64_t>(sheet) * (g.target + 1);
  return RCyclicMor::from_samples(r, g.source, g.target, s);
}

DeltaMor sd_on_morphism(int r, const DeltaMor& phi) {
  require(r >= 1, "r must be at least 1");
  DeltaMor out{r * (phi.source + 1) - 1, r * (phi.target + 1) - 1, {}};
  for (int x = 0; x <= out.source; ++x) out.values.push_back(static_cast<int>(phi.eval(x)));
  return out;
}

RCyclicMor rcyclic_group_generator(int r, int k) {
  std::vector<std::int64_t> s;
  for (int x = 0; x <= k + 1; ++x) s.push_back(x - (k + 1));
  return RCyclicMor::from_samples(r, k, k, s);
}

// --- enumeration -----------------------------------------------------------------------

std::uint64_t count_delta(int m, int n) {
  if (m < 0 || n < 0) return 0;
  // C(m + n + 1, m + 1)
  const unsigned __int128 limit = std::numeric_limits<std::uint64_t>::max();
  unsigned __int128 c = 1;
  const int k = m + 1;
  const int total = m + n + 1;
  for (int i = 0; i < k; ++i) {
    c = c * static_cast<unsigned>(total - i) / static_cast<unsigned>(i + 1);
    if (c > limit) return std::numeric_limits<std::uint64_t>::max();
  }
  return static_cast<std::uint64_t>(c);
}

namespace {
std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  unsigned __int128 p = static_cast<unsigned __int128>(a) * b;
  if (p > std::numeric_limits<std::uint64_t>::max()) return std::numeric_limits<std::uint64_t>::max();
  return static_cast<std::uint64_t>(p);
}
}  // namespace

std::uint64_t count_lambda(int m, int n) { return saturating_mul(static_cast<std::uint64_t>(m) + 1, count_delta(m, n)); }

std::uint64_t count_rcyclic(int r, int m, int n) { return saturating_mul(static_cast<std::uint64_t>(r), count_lambda(m, n)); }

std::vector<DeltaMor> enumerate_delta(int m, int n, std::size_t cap) {
  require(m >= 0 && n >= 0, "levels must be non-negative");
  require_cap(count_delta(m, n), cap, "Delta");
  std::vector<std::vector<int>> seqs;
  std::vector<int> prefix;
  generate_monotone(m + 1, 0, n, prefix, seqs);
  std::vector<DeltaMor> out;
  out.reserve(seqs.size());
  for (auto& s : seqs) out.push_back(DeltaMor{m, n, std::move(s)});
  return out;
}

std::vector<LambdaMor> enumerate_lambda(int m, int n, std::size_t cap) {
  require(m >= 0 && n >= 0, "levels must be non-negative");
  require_cap(count_lambda(m, n), cap, "Lambda");
  const auto deltas = enumerate_delta(m, n, cap);
  std::vector<LambdaMor> out;
  out.reserve(deltas.size() * (static_cast<std::size_t>(m) + 1));
  for (int j = 0; j <= m; ++j) {
    for (const auto& d : deltas) out.push_back(LambdaMor{m, n, j, d});
  }
  return out;
}

std::vector<RCyclicMor> enumerate_rcyclic(int r, int m, int n, std::size_t cap) {
  require(r >= 1 && m >= 0 && n >= 0, "need r >= 1 and non-negative levels");
  require_cap(count_rcyclic(r, m, n), cap, "Lambda_r");
  std::vector<RCyclicMor> out;
  const std::int64_t modulus = static_cast<std::int64_t>(r) * (n + 1);
  for (std::int64_t b = 0; b < modulus; ++b) {
    std::vector<std::vector<int>> tails;
    std::vector<int> prefix;
    generate_monotone(m, 0, n + 1, prefix, tails);
    for (const auto& t : tails) {
      RCyclicMor f{r, m, n, {b}};
      for (int v : t) f.values.push_back(b + v);
      out.push_back(std::move(f));
    }
  }
  return out;
}

// --- generator words -------------------------------------------------------------------

LambdaMor Generator::morphism() const {
  switch (kind) {
    case Kind::Face: return LambdaMor::coface(target, index);
    case Kind::Degeneracy: return LambdaMor::codegeneracy(target, index);
    case Kind::Cycle: return LambdaMor::cycle(target);
    case Kind::CycleInverse: return LambdaMor::cycle_power(target, -1);
  }
  return LambdaMor::identity(target);
}

std::string Generator::to_string() const {
  switch (kind) {
    case Kind::Face: return "d^" + std::to_string(index) + "@" + std::to_string(target);
    case Kind::Degeneracy: return "s^" + std::to_string(index) + "@" + std::to_string(target);
    case Kind::Cycle: return "tau@" + std::to_string(target);
    case Kind::CycleInverse: return "tau^-1@" + std::to_string(target);
  }
  return "?";
}

std::string GeneratorWord::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    if (i) s += ",";
    s += atoms[i].to_string();
  }
  return s + "]";
}

LambdaMor evaluate(const GeneratorWord& word) {
  LambdaMor acc = LambdaMor::identity(word.source);
  for (const auto& a : word.atoms) {
    require(a.source == acc.target, "generator word is not well typed at " + a.to_string());
    acc = compose(a.morphism(), acc);
  }
  require(acc.target == word.target, "generator word ends at the wrong level");
  return acc;
}

namespace {

// Appends atoms factoring the Delta map with the given values, degeneracies first.
// pick(candidates) selects which admissible position to peel next.
template <typename Pick>
void factor_delta(std::vector<int> g, int target, std::vector<Generator>& atoms, Pick pick) {
  int level = static_cast<int>(g.size()) - 1;
  for (;;) {
    std::vector<int> repeats;
    for (int x = 0; x + 1 <= level; ++x) {
      if (g[static_cast<std::size_t>(x)] == g[static_cast<std::size_t>(x) + 1]) repeats.push_back(x);
    }
    if (repeats.empty()) break;
    const int x = pick(repeats);
    atoms.push_back(Generator::degeneracy(level - 1, x));
    g.erase(g.begin() + x + 1);
    --level;
  }
  std::vector<Generator> faces;
  int n = target;
  while (level < n) {
    std::vector<int> missing;
    for (int i = 0, k = 0; i <= n; ++i) {
      if (k <= level && g[static_cast<std::size_t>(k)] == i) {
        ++k;
      } else {
        missing.push_back(i);
      }
    }
    const int i = pick(missing);
    faces.push_back(Generator::face(n, i));
    for (auto& v : g) {
      if (v > i) --v;
    }
    --n;
  }
  atoms.insert(atoms.end(), faces.rbegin(), faces.rend());
}

void append_cycles(std::vector<Generator>& atoms, int level, int power, bool prefer_inverse) {
  power = static_cast<int>(floor_mod(power, level + 1));
  if (power == 0) return;
  const int inverse_len = level + 1 - power;
  if (prefer_inverse || inverse_len < power) {
    for (int k = 0; k < inverse_len; ++k) atoms.push_back(Generator::cycle_inverse(level));
  } else {
    for (int k = 0; k < power; ++k) atoms.push_back(Generator::cycle(level));
  }
}

}  // namespace

GeneratorWord to_generator_word(const LambdaMor& f) {
  GeneratorWord w{f.source, f.target, {}};
  append_cycles(w.atoms, f.source, f.rot, false);
  factor_delta(f.delta.values, f.target, w.atoms, [](const std::vector<int>& c) { return c.back(); });
  return w;
}

GeneratorWord alternate_generator_word(const LambdaMor& f, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> shift_dist(0, f.target);
  const int a = shift_dist(rng);
  const LambdaMor rest = compose(LambdaMor::cycle_power(f.target, -a), f);
  GeneratorWord w{f.source, f.target, {}};
  append_cycles(w.atoms, f.source, rest.rot, std::bernoulli_distribution(0.5)(rng));
  factor_delta(rest.delta.values, f.target, w.atoms, [&rng](const std::vector<int>& c) {
    std::uniform_int_distribution<std::size_t> d(0, c.size() - 1);
    return c[d(rng)];
  });
  append_cycles(w.atoms, f.target, a, std::bernoulli_distribution(0.5)(rng));
  return w;
}

std::string to_string(const DeltaMor& f) {
  std::ostringstream os;
  os << "[" << f.source << "]->[" << f.target << "] (";
  for (std::size_t i = 0; i < f.values.size(); ++i) os << (i ? "," : "") << f.values[i];
  os << ")";
  return os.str();
}

std::string to_string(const LambdaMor& f) {
  std::ostringstream os;
  os << "[" << f.source << "]->[" << f.target << "] rot=" << f.rot << " delta=(";
  for (std::size_t i = 0; i < f.delta.values.size(); ++i) os << (i ? "," : "") << f.delta.values[i];
  os << ")";
  return os.str();
}

std::string to_string(const RCyclicMor& f) {
  std::ostringstream os;
  os << "r=" << f.r << " [" << f.source << "]->[" << f.target << "] F=(";
  for (std::size_t i = 0; i < f.values.size(); ++i) os << (i ? "," : "") << f.values[i];
  os << ")";
  return os.str();
}

}  // namespace cyclotome
