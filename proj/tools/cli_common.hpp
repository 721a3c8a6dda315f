#pragma once

#include <cstdint>
#include <cstdlib>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "vgreen/vgreen.hpp"

namespace vgreen::cli {

using json = nlohmann::ordered_json;

// Bad flags or flag combinations; exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string family = "is";
  std::size_t n = 0;
  std::string a;
  std::string b;
  bool all_a = false;
  bool rank_reps = false;
  std::size_t sample = 0;
  std::uint64_t seed = 1;
  std::string relation = "r";
  std::string method = "brute";
  std::string mode = "corrected";
  std::string format = "text";
  bool full = false;
  std::size_t threshold = 50;
  EngineOptions engine;
};

inline constexpr std::size_t all_a_cap = 4;
inline constexpr const char* budget_env = "VGREEN_PRODUCT_BUDGET";

inline EngineOptions engine_options_from_env() {
  EngineOptions opts;
  if (const char* env = std::getenv(budget_env)) {
    char* end = nullptr;
    auto value = std::strtoull(env, &end, 10);
    if (end == env || *end != '\0') {
      throw UsageError(std::string(budget_env) + " must be a nonnegative integer");
    }
    opts.product_budget = value;
  }
  return opts;
}

inline Relation parse_relation(const std::string& s) {
  if (s == "r") return Relation::r;
  if (s == "l") return Relation::l;
  if (s == "h") return Relation::h;
  if (s == "d") return Relation::d;
  if (s == "j") return Relation::j;
  throw UsageError("unknown relation '" + s + "'");
}

inline std::vector<Mode> parse_modes(const std::string& s) {
  if (s == "corrected") return {Mode::corrected};
  if (s == "paper-literal") return {Mode::paper_literal};
  if (s == "both") return {Mode::paper_literal, Mode::corrected};
  throw UsageError("unknown mode '" + s + "'");
}

template <Element E>
E parse_with_degree(const std::string& text, std::size_t n, const char* flag) {
  E x;
  try {
    x = parse_element<E>(text);
  } catch (const InvalidElement& e) {
    throw UsageError(std::string(flag) + ": " + e.what());
  }
  if (n != 0 && x.degree() != n) {
    throw UsageError(std::string(flag) + " has degree " + std::to_string(x.degree()) +
                     " but --n is " + std::to_string(n));
  }
  return x;
}

// Deformations selected by --a / --all-a / --rank-reps / --sample, in
// canonical order.
template <Element E>
std::vector<E> select_deformations(const RunConfig& cfg, bool allow_all) {
  const int chosen = !cfg.a.empty() + cfg.all_a + cfg.rank_reps + (cfg.sample > 0);
  if (chosen != 1) {
    throw UsageError("choose exactly one of --a, --all-a, --rank-reps, --sample");
  }
  if (!cfg.a.empty()) return {parse_with_degree<E>(cfg.a, cfg.n, "--a")};
  if (cfg.n == 0) throw UsageError("--n is required");
  if (cfg.all_a) {
    if (!allow_all) throw UsageError("--all-a is not supported by this command");
    if (cfg.n > all_a_cap) {
      throw UsageError("--all-a is limited to n <= " + std::to_string(all_a_cap));
    }
    return enumerate<E>(cfg.n);
  }
  if (cfg.rank_reps) {
    if constexpr (std::is_same_v<E, PartialPerm>) {
      // one partial identity per rank; variants of equal rank are isomorphic
      std::vector<E> reps;
      for (std::size_t k = 0; k <= cfg.n; ++k) {
        std::vector<std::uint8_t> images(cfg.n, undefined_point);
        for (std::size_t i = 0; i < k; ++i) images[i] = static_cast<std::uint8_t>(i);
        reps.push_back(PartialPerm::from_images(images));
      }
      return reps;
    } else {
      throw UsageError("--rank-reps is only available for --family is");
    }
  }
  // --sample: distinct deformations by a seeded partial shuffle
  auto universe = enumerate<E>(cfg.n);
  std::mt19937_64 rng(cfg.seed);
  const auto k = std::min(cfg.sample, universe.size());
  for (std::size_t i = 0; i < k; ++i) {
    const auto j = i + static_cast<std::size_t>(rng() % (universe.size() - i));
    std::swap(universe[i], universe[j]);
  }
  universe.resize(k);
  std::sort(universe.begin(), universe.end());
  return universe;
}

template <Element E>
json element_list(const VariantSemigroup<E>& v, const std::vector<index_t>& members) {
  json out = json::array();
  for (auto x : members) out.push_back(format_element(v.element(x)));
  return out;
}

template <Element E>
std::string element_set_text(const VariantSemigroup<E>& v,
                             const std::vector<index_t>& members) {
  std::string out = "{";
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (i) out += ' ';
    out += "[" + format_element(v.element(members[i])) + "]";
  }
  return out + "}";
}

inline json count_rows_json(const std::vector<CountRow>& rows) {
  json out = json::array();
  auto opt = [](const std::optional<count_t>& v) -> json {
    return v ? json(*v) : json(nullptr);
  };
  for (const auto& r : rows) {
    out.push_back({{"side", r.side},
                   {"quantity", r.quantity},
                   {"paper_value", opt(r.paper)},
                   {"corrected_value", opt(r.corrected)},
                   {"enumerated_value", opt(r.enumerated)},
                   {"flag", r.flag()}});
  }
  return out;
}

}  // namespace vgreen::cli
