#pragma once

// Text exports of a GaitTrajectory. Numbers are written with 17 significant
// digits via std::to_chars (locale independent, '.' separator); every row
// ends with '\n'. Identical trajectories therefore produce identical bytes.

#include <array>
#include <charconv>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <openssl/evp.h>

#include "pinniped/errors.hpp"
#include "pinniped/gait_synthesis.hpp"
#include "pinniped/robot_model.hpp"

namespace pinniped::io {

inline std::string format_number(double v) {
  std::array<char, 64> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v, std::chars_format::general, 17);
  return std::string(buf.data(), res.ptr);
}

/// Wide format: t, then l_<limb>1..3 for H, B, FR, FL.
inline std::string jointspace_csv(const GaitTrajectory& traj) {
  std::string out = "t";
  for (LimbId id : kAllLimbs) {
    for (int i = 1; i <= 3; ++i) out += ",l_" + std::string(limb_name(id)) + std::to_string(i);
  }
  out += '\n';
  for (std::size_t k = 0; k < traj.size(); ++k) {
    out += format_number(traj.time[k]);
    for (LimbId id : kAllLimbs) {
      for (double l : traj.limb(id)[k].joints.l) {
        out += ',';
        out += format_number(l);
      }
    }
    out += '\n';
  }
  return out;
}

/// Long format, one row per sample and limb: realized tip in the limb frame
/// plus curve parameters.
inline std::string taskspace_csv(const GaitTrajectory& traj) {
  std::string out = "t,limb,x,y,z,theta,phi\n";
  for (std::size_t k = 0; k < traj.size(); ++k) {
    for (LimbId id : kAllLimbs) {
      const auto& s = traj.limb(id)[k];
      out += format_number(traj.time[k]);
      out += ',';
      out += limb_name(id);
      for (double v : {s.tip.x(), s.tip.y(), s.tip.z(), s.curve.theta, s.curve.phi}) {
        out += ',';
        out += format_number(v);
      }
      out += '\n';
    }
  }
  return out;
}

/// Robot CoG in {O_R} with the ground-contact flag.
inline std::string cog_csv(const GaitTrajectory& traj) {
  std::string out = "t,x,y,z,ground_contact\n";
  for (std::size_t k = 0; k < traj.size(); ++k) {
    const auto& c = traj.cog[k];
    out += format_number(traj.time[k]);
    for (double v : {c.x(), c.y(), c.z()}) {
      out += ',';
      out += format_number(v);
    }
    out += traj.ground_contact[k] ? ",1\n" : ",0\n";
  }
  return out;
}

/// Jointspace columns in a caller-chosen limb order, for an external
/// jointspace-to-pressure mapper: t, <limb>_1, <limb>_2, <limb>_3, ...
inline std::string pressure_seam_csv(const GaitTrajectory& traj, const std::vector<LimbId>& order) {
  std::string out = "t";
  for (LimbId id : order) {
    for (int i = 1; i <= 3; ++i) out += "," + std::string(limb_name(id)) + "_" + std::to_string(i);
  }
  out += '\n';
  for (std::size_t k = 0; k < traj.size(); ++k) {
    out += format_number(traj.time[k]);
    for (LimbId id : order) {
      for (double l : traj.limb(id)[k].joints.l) {
        out += ',';
        out += format_number(l);
      }
    }
    out += '\n';
  }
  return out;
}

/// Parses "H,B,FR,FL"-style limb lists.
inline std::vector<LimbId> parse_limb_order(std::string_view text) {
  std::vector<LimbId> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = std::min(text.find(',', pos), text.size());
    const auto name = text.substr(pos, comma - pos);
    auto id = limb_from_name(name);
    if (!id) throw ValidationError("unknown limb '" + std::string(name) + "' in limb order");
    out.push_back(*id);
    pos = comma + 1;
  }
  return out;
}

inline std::string sha256_hex(std::string_view data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr) != 1) {
    throw Error("SHA-256 digest failed");
  }
  std::string hex;
  hex.reserve(2 * len);
  for (unsigned int i = 0; i < len; ++i) {
    char b[3];
    std::snprintf(b, sizeof b, "%02x", digest[i]);
    hex += b;
  }
  return hex;
}

inline void write_file(const std::filesystem::path& path, std::string_view body) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw Error("cannot open " + path.string() + " for writing");
  f.write(body.data(), static_cast<std::streamsize>(body.size()));
  if (!f) throw Error("failed writing " + path.string());
}

inline std::string read_file(const std::filesystem::path& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw Error("cannot open " + path.string());
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

}  // namespace pinniped::io
