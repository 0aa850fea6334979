#pragma once

#include <string>

#include "spincav/spectral.hpp"
#include "spincav/states.hpp"

namespace spincav {

// Flat key = value run configuration (dotted keys, '#' comments).  Grammar:
//   file    := line*
//   line    := ws [key ws '=' ws value] ws [comment] '\n'
//   key     := dotted identifier, e.g. density.model
//   value   := token up to end of line (trailing ws stripped)
// Unknown keys are rejected so sweep axes cannot silently miss.
struct RunConfig {
    // density.*
    DensityModel model = DensityModel::HalfwaveCosSq;
    double T = 1.0;
    double sigma_trunc = 6.0;
    // cavity.*
    double Omega = 10.0*3.14159265358979323846;
    double omega_c = 0.0;
    // grid.*
    int n = 8192;
    double W = 8.0*3.14159265358979323846;
    // ensemble.*
    int N = 4096;
    // dynamics.*
    double t_past = -4.0;
    double t_asym = 8.0;
    double tau_min = -8.0;
    double tau_max = 8.0;
    double tau_step = 1.0/64.0;
    double t_step = 1.0/64.0;
    // packet.*
    PacketKind kind = PacketKind::Delta;
    double omega0 = 0.0;
    double bandwidth = 3.14159265358979323846/8.0;
    std::string table;        // packet.table, CSV path for kind = tabulated
    // output.*
    std::string dir = "out";
    std::string formats = "csv";

    SpectralDensity density() const;
    WavePacket packet() const;
};

// Parse text in the grammar above.  Throws ValidationError with a
// line-numbered message on bad syntax, unknown keys, or unparsable values.
RunConfig parse_config(const std::string& text);
RunConfig load_config_file(const std::string& path);

// Apply one --set override, "key=value".
void apply_override(RunConfig& cfg, const std::string& assignment);

// Canonical serialization: fixed key order, shortest round-trip doubles.
// parse(serialize(c)) == c exactly.
std::string serialize_config(const RunConfig& cfg);

// Range/finiteness checks shared by all commands (N >= 64, n a power of
// two >= 1024, T > 0, steps > 0, ...).  Throws ValidationError.
void validate_config(const RunConfig& cfg);

// 16-hex-digit FNV-1a of the canonical serialization; names output files,
// so identical configs map to identical paths (sweep resume relies on it).
std::string run_id(const RunConfig& cfg);

} // namespace spincav
