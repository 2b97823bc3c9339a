#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "vmsrom/basis.hpp"
#include "vmsrom/state.hpp"

namespace vmsrom {

// All binary artifacts are little-endian regardless of host, share the layout
// (8-byte magic, 8-byte mesh checksum, 64-bit counts, float64 payload), and
// carry a JSON sidecar at `<path>.json` with the run metadata and the config
// hash. Writers are deterministic: identical inputs produce identical bytes.

// Snapshot files, magic "VROM0001": checksum, M_h, K_h, n_snapshots,
// sampling interval dt*stride, then per snapshot t, u, p.
void save_snapshots(const std::filesystem::path& path, const SnapshotSet& snaps,
                    const nlohmann::json& extra_meta = nlohmann::json::object());
SnapshotSet load_snapshots(const std::filesystem::path& path);

// Basis files, magic "VROMB001": checksum, M_h, K_h, n_modes,
// with_supremizers, the three eigenvalue spectra, then Z_u and Z_p
// column-major.
void save_basis(const std::filesystem::path& path, const ReducedBasis& basis,
                const nlohmann::json& extra_meta = nlohmann::json::object());
ReducedBasis load_basis(const std::filesystem::path& path);

// Reduced-trajectory files, magic "VROMT001": checksum, velocity/pressure
// coefficient counts, n_samples, sampling interval, then per sample t and the
// coefficient vectors.
void save_trajectory(const std::filesystem::path& path, const RomTrajectory& traj,
                     const nlohmann::json& extra_meta = nlohmann::json::object());
RomTrajectory load_trajectory(const std::filesystem::path& path);

// Sidecar access (throws FormatError when missing or unparsable).
nlohmann::json load_sidecar(const std::filesystem::path& binary_path);

// Shortest exact decimal representation (std::to_chars), used by every CSV
// writer so artifacts are locale-independent and byte-stable.
std::string format_double(double value);

// CSV emission. Every writer puts `# config_hash=<16 hex digits>` on the
// first line, then a header row; separator ",", LF endings.
void write_eigenvalue_csv(const std::filesystem::path& path, const Vec& lambda_u,
                          const Vec& lambda_s, const Vec& lambda_p, std::uint64_t config_hash);

struct ErrorsVsTimeRow {
  double t = 0.0;
  std::string variant;
  double err_u_h1 = 0.0;
  double err_p_l2 = 0.0;
  double err_kinetic = 0.0;
  double err_enstrophy = 0.0;
};
void write_errors_vs_time_csv(const std::filesystem::path& path,
                              const std::vector<ErrorsVsTimeRow>& rows,
                              std::uint64_t config_hash);

struct ErrorsVsNRow {
  int n = 0;
  std::string variant;
  double err_u = 0.0;
  double err_p = 0.0;
};
void write_errors_vs_n_csv(const std::filesystem::path& path,
                           const std::vector<ErrorsVsNRow>& rows, std::uint64_t config_hash);

// Parse the two error-CSV kinds back (used by the compare command). Lines
// starting with '#' are skipped; the config hash of the first such line is
// returned through `config_hash` when non-null.
std::vector<ErrorsVsTimeRow> read_errors_vs_time_csv(const std::filesystem::path& path,
                                                     std::uint64_t* config_hash = nullptr);
std::vector<ErrorsVsNRow> read_errors_vs_n_csv(const std::filesystem::path& path,
                                               std::uint64_t* config_hash = nullptr);

}  // namespace vmsrom
