#pragma once

#include "mcone/document.hpp"

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>

namespace mcone::cli {

enum class OutputFormat { Human, KeyValue };

/// Exit codes shared by all commands.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitSelfCheck = 2;

/// A named VEC from the document, or a comma-separated list of rationals.
RVector resolve_vector(const ConeDocument& doc, std::string_view arg);

int cmd_validate(const ConeDocument& doc, OutputFormat format, std::ostream& out);

struct DecomposeOptions {
  bool all = false;
  std::size_t max_count = 16;
};
int cmd_decompose(const ConeDocument& doc, const RVector& z, const DecomposeOptions& options,
                  OutputFormat format, std::ostream& out);

int cmd_orthogonal(const ConeDocument& doc, const RVector& x, const RVector& y, bool witness,
                   OutputFormat format, std::ostream& out);

struct MixdistOptions {
  // Table: alpha, beta in {0, 1/M, ..., 1} (default M = 4).
  // Comparison: t in {0, 1/M, ..., 1} on alpha + beta = 1 (default M = 64).
  std::optional<std::size_t> grid;
  std::optional<std::pair<RVector, RVector>> compare;
};
int cmd_mixdist(const ConeDocument& doc, const RVector& x, const RVector& y,
                const MixdistOptions& options, OutputFormat format, std::ostream& out);

struct AuditOptions {
  std::size_t samples = 32;
  std::uint64_t seed = 1;
};
int cmd_audit_map(const ConeDocument& doc, const std::string& map_name, const AuditOptions& options,
                  OutputFormat format, std::ostream& out);

/// Reproduces the square-base non-uniqueness example on `doc` (the built-in
/// square-base cone when absent).
int cmd_demo(const std::optional<ConeDocument>& doc, OutputFormat format, std::ostream& out);

}  // namespace mcone::cli
