// Copyright 2026 The RAHT-RLGR Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//
// Command-line front end: encode, decode, eval, sweep, stats, generate.

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "raht/cloud_io.hpp"
#include "raht/container.hpp"
#include "raht/error.hpp"
#include "raht/metrics.hpp"
#include "raht/synth.hpp"
#include "raht/transform.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitInternal = 3;

// Tracks which step a subcommand is in so failures can name it.
struct Stage {
  std::string command;
  std::string step;
};

int report(const Stage& stage, const std::string& message, int code) {
  std::cerr << "raht " << stage.command << ": " << stage.step << ": " << message << "\n";
  return code;
}

template <typename Fn>
int run_guarded(Stage& stage, Fn&& fn) {
  try {
    fn();
    return kExitOk;
  } catch (const raht::Error& e) {
    const int code =
        e.kind() == raht::ErrorKind::kInvariantViolation ? kExitInternal : kExitInput;
    return report(stage, std::string(raht::to_string(e.kind())) + ": " + e.what(), code);
  } catch (const std::exception& e) {
    return report(stage, e.what(), kExitInternal);
  }
}

raht::VoxelizeWarnings last_warnings;

raht::VoxelCloud load_cloud(Stage& stage, const std::string& path, int depth) {
  stage.step = "read " + path;
  const std::vector<std::uint8_t> bytes = raht::read_file(path);
  stage.step = "parse " + path;
  const raht::RawPointCloud raw = raht::parse_ply(bytes);
  stage.step = "voxelize " + path;
  raht::VoxelCloud cloud = raht::voxelize(raw, depth, &last_warnings);
  static constexpr char kAxes[] = {'x', 'y', 'z'};
  for (std::size_t a = 0; a < 3; ++a) {
    if (last_warnings.degenerate_axis[a]) {
      std::cerr << "raht " << stage.command << ": warning: " << path << " has zero extent along "
                << kAxes[a] << "; mapped to 0\n";
    }
  }
  return cloud;
}

raht::OrderingMode require_mode(const std::string& name) {
  const auto mode = raht::parse_ordering_mode(name);
  if (!mode) {
    throw raht::Error(raht::ErrorKind::kUnknownOrderingMode,
                      "unknown ordering '" + name + "' (traversal|depth|weight)");
  }
  return *mode;
}

raht::PlyFormat ply_format(bool ascii) {
  return ascii ? raht::PlyFormat::kAscii : raht::PlyFormat::kBinaryLittleEndian;
}

void write_text(const std::string& path, const std::string& text) {
  raht::write_file(path, std::span<const std::uint8_t>(
                             reinterpret_cast<const std::uint8_t*>(text.data()), text.size()));
}

// ---------------------------------------------------------------------------

struct EncodeArgs {
  std::string input, output;
  int depth = 10;
  double q = 10.0;
  std::string order = "depth";
  bool bundle = false;
};

int cmd_encode(const EncodeArgs& a) {
  Stage stage{"encode", "arguments"};
  return run_guarded(stage, [&] {
    const raht::QuantStep q(a.q);
    const raht::OrderingMode mode = require_mode(a.order);
    const raht::VoxelCloud cloud = load_cloud(stage, a.input, a.depth);
    stage.step = "encode";
    const raht::CodecStream stream = raht::encode(cloud, q, mode, a.bundle);
    stage.step = "write " + a.output;
    raht::write_file(a.output, stream.serialize());
    const auto& len = stream.header.payload_bytes;
    std::cerr << "voxels " << cloud.size() << ", symbols 3x" << cloud.size() << ", payload bytes Y "
              << len[0] << " U " << len[1] << " V " << len[2] << ", bpv "
              << raht::format_bpv(stream.bits_per_voxel()) << "\n";
  });
}

struct DecodeArgs {
  std::string input, output, geometry;
  bool ascii = false;
};

int cmd_decode(const DecodeArgs& a) {
  Stage stage{"decode", "read " + a.input};
  return run_guarded(stage, [&] {
    const std::vector<std::uint8_t> bytes = raht::read_file(a.input);
    stage.step = "parse stream";
    const raht::CodecStream stream = raht::CodecStream::parse(bytes);
    std::optional<raht::VoxelCloud> geometry;
    if (!a.geometry.empty()) {
      geometry = load_cloud(stage, a.geometry, stream.header.depth);
    } else if (!stream.header.geometry_bundled()) {
      throw raht::Error(raht::ErrorKind::kMissingGeometry,
                        "stream carries no geometry; pass --geometry");
    }
    stage.step = "decode";
    const raht::VoxelCloud out = raht::decode(stream, geometry ? &*geometry : nullptr);
    stage.step = "write " + a.output;
    raht::write_file(a.output, raht::write_ply(out, ply_format(a.ascii)));
    std::cerr << "decoded " << out.size() << " voxels\n";
  });
}

struct EvalArgs {
  std::string a, b;
  int depth = 10;
};

int cmd_eval(const EvalArgs& a) {
  Stage stage{"eval", "arguments"};
  return run_guarded(stage, [&] {
    const raht::VoxelCloud first = load_cloud(stage, a.a, a.depth);
    const raht::VoxelCloud second = load_cloud(stage, a.b, a.depth);
    stage.step = "psnr";
    std::cout << raht::format_psnr(raht::psnr_y(first, second)) << "\n";
  });
}

struct SweepArgs {
  std::string input, csv;
  int depth = 10;
  std::vector<double> qs{10.0, 40.0};
  std::vector<std::string> orders{"traversal", "depth", "weight"};
};

int cmd_sweep(const SweepArgs& a) {
  Stage stage{"sweep", "arguments"};
  return run_guarded(stage, [&] {
    std::vector<raht::OrderingMode> modes;
    for (const auto& o : a.orders) modes.push_back(require_mode(o));
    for (double q : a.qs) raht::QuantStep check(q);
    const raht::VoxelCloud cloud = load_cloud(stage, a.input, a.depth);
    stage.step = "sweep";
    const std::string name = std::filesystem::path(a.input).stem().string();
    const std::vector<raht::RdPoint> rows = raht::rd_sweep(name, cloud, a.qs, modes);
    std::ostringstream csv;
    raht::write_rd_csv(csv, rows);
    if (a.csv.empty()) {
      std::cout << csv.str();
    } else {
      stage.step = "write " + a.csv;
      write_text(a.csv, csv.str());
    }
  });
}

struct StatsArgs {
  std::string input, dump;
  int depth = 10;
  double q = 10.0;
  std::string order = "depth";
};

int cmd_stats(const StatsArgs& a) {
  Stage stage{"stats", "arguments"};
  return run_guarded(stage, [&] {
    const raht::QuantStep q(a.q);
    const raht::OrderingMode mode = require_mode(a.order);
    const raht::VoxelCloud cloud = load_cloud(stage, a.input, a.depth);
    stage.step = "transform";
    const raht::MergeSchedule schedule = raht::build_schedule(cloud);
    const raht::CoefficientSet coeffs = raht::forward(cloud, schedule);
    const raht::Permutation perm = raht::make_permutation(mode, coeffs.info);
    const raht::QuantizedChannels quantized = raht::quantize_in_order(cloud, schedule, q, mode);

    static constexpr const char* kChannels[] = {"Y", "U", "V"};
    raht::ZeroRunStats pooled;
    std::cout << "voxels " << cloud.size() << " order " << raht::to_string(mode) << " Q " << a.q
              << "\n";
    for (std::size_t c = 0; c < 3; ++c) {
      std::cout << "avg_zero_run " << kChannels[c] << " "
                << raht::format_bpv(raht::avg_zero_run(quantized[c])) << "\n";
      pooled.add(quantized[c]);
    }
    std::cout << "avg_zero_run pooled " << raht::format_bpv(pooled.mean()) << "\n";

    // Per-depth high-pass counts, with nonzero counts per channel.
    const std::vector<raht::CoefficientInfo> ordered =
        perm.apply(std::span<const raht::CoefficientInfo>(coeffs.info));
    std::map<int, std::array<std::size_t, 4>> histogram;
    for (std::size_t i = 1; i < ordered.size(); ++i) {
      auto& h = histogram[ordered[i].depth];
      ++h[0];
      for (std::size_t c = 0; c < 3; ++c) h[c + 1] += quantized[c][i] != 0 ? 1 : 0;
    }
    std::cout << "depth,count,nonzero_y,nonzero_u,nonzero_v\n";
    for (const auto& [depth, h] : histogram) {
      std::cout << depth << "," << h[0] << "," << h[1] << "," << h[2] << "," << h[3] << "\n";
    }

    if (!a.dump.empty()) {
      stage.step = "write " + a.dump;
      std::ostringstream out;
      out << "position,traversal_index,depth,weight,q_y,q_u,q_v\n";
      for (std::size_t i = 0; i < ordered.size(); ++i) {
        out << i << "," << ordered[i].traversal_index << "," << ordered[i].depth << ","
            << ordered[i].weight << "," << quantized[0][i] << "," << quantized[1][i] << ","
            << quantized[2][i] << "\n";
      }
      write_text(a.dump, out.str());
    }
  });
}

struct GenerateArgs {
  std::string output;
  std::string kind = "gradient";
  int depth = 6;
  double fill = 0.05;
  std::uint64_t seed = 1;
  bool ascii = false;
};

int cmd_generate(const GenerateArgs& a) {
  Stage stage{"generate", "arguments"};
  return run_guarded(stage, [&] {
    const auto kind = raht::synth::parse_kind(a.kind);
    if (!kind) {
      throw raht::Error(raht::ErrorKind::kInvalidArgument,
                        "unknown kind '" + a.kind + "' (constant|gradient|noise)");
    }
    stage.step = "generate";
    const raht::RawPointCloud cloud = raht::synth::generate({*kind, a.depth, a.fill, a.seed});
    stage.step = "write " + a.output;
    raht::write_file(a.output, raht::write_ply(cloud, ply_format(a.ascii)));
    std::cerr << "generated " << cloud.points.size() << " points\n";
  });
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Point cloud attribute codec: RAHT + coefficient ordering + RLGR"};
  app.require_subcommand(1);
  int exit_code = kExitOk;

  auto depth_check = CLI::Range(raht::kMinDepth, raht::kMaxDepth);

  EncodeArgs enc;
  auto* encode = app.add_subcommand("encode", "Compress the colors of a PLY cloud");
  encode->add_option("input", enc.input, "Input PLY")->required();
  encode->add_option("output", enc.output, "Output bitstream")->required();
  encode->add_option("--depth,-L", enc.depth, "Octree depth")->required()->check(depth_check);
  encode->add_option("--q,-q", enc.q, "Quantizer step")->required();
  encode->add_option("--order", enc.order, "traversal|depth|weight")->capture_default_str();
  encode->add_flag("--bundle-geometry", enc.bundle, "Store Morton codes in the stream");
  encode->callback([&] { exit_code = cmd_encode(enc); });

  DecodeArgs dec;
  auto* decode = app.add_subcommand("decode", "Reconstruct a PLY cloud from a bitstream");
  decode->add_option("input", dec.input, "Input bitstream")->required();
  decode->add_option("output", dec.output, "Output PLY")->required();
  decode->add_option("--geometry", dec.geometry, "PLY providing the geometry");
  decode->add_flag("--ascii", dec.ascii, "Write ASCII PLY");
  decode->callback([&] { exit_code = cmd_decode(dec); });

  EvalArgs ev;
  auto* eval = app.add_subcommand("eval", "Luminance PSNR between two clouds");
  eval->add_option("a", ev.a, "Reference PLY")->required();
  eval->add_option("b", ev.b, "Test PLY")->required();
  eval->add_option("--depth,-L", ev.depth, "Octree depth")->required()->check(depth_check);
  eval->callback([&] { exit_code = cmd_eval(ev); });

  SweepArgs sw;
  auto* sweep = app.add_subcommand("sweep", "Rate/PSNR/zero-run sweep as CSV");
  sweep->add_option("input", sw.input, "Input PLY")->required();
  sweep->add_option("--depth,-L", sw.depth, "Octree depth")->required()->check(depth_check);
  sweep->add_option("--q-list", sw.qs, "Quantizer steps")->delimiter(',')->capture_default_str();
  sweep->add_option("--orders", sw.orders, "Orderings")->delimiter(',')->capture_default_str();
  sweep->add_option("--csv", sw.csv, "CSV output path (stdout if omitted)");
  sweep->callback([&] { exit_code = cmd_sweep(sw); });

  StatsArgs st;
  auto* stats = app.add_subcommand("stats", "Zero-run and per-depth coefficient statistics");
  stats->add_option("input", st.input, "Input PLY")->required();
  stats->add_option("--depth,-L", st.depth, "Octree depth")->required()->check(depth_check);
  stats->add_option("--q,-q", st.q, "Quantizer step")->required();
  stats->add_option("--order", st.order, "traversal|depth|weight")->capture_default_str();
  stats->add_option("--dump", st.dump, "Write encode-order coefficient CSV");
  stats->callback([&] { exit_code = cmd_stats(st); });

  GenerateArgs gen;
  auto* generate = app.add_subcommand("generate", "Write a seeded synthetic cloud");
  generate->add_option("output", gen.output, "Output PLY")->required();
  generate->add_option("--kind", gen.kind, "constant|gradient|noise")->capture_default_str();
  generate->add_option("--depth,-L", gen.depth, "Grid depth")->capture_default_str()->check(depth_check);
  generate->add_option("--fill", gen.fill, "Occupied fraction in (0,1]")->capture_default_str();
  generate->add_option("--seed", gen.seed, "RNG seed")->capture_default_str();
  generate->add_flag("--ascii", gen.ascii, "Write ASCII PLY");
  generate->callback([&] { exit_code = cmd_generate(gen); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }
  return exit_code;
}
