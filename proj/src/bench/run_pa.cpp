// Copyright 2026 The qkdpa Authors
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

#include <cstdio>
#include <optional>
#include <span>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <string>

#include "qkdpa/bench.hpp"
#include "qkdpa/errors.hpp"
#include "qkdpa/pa.hpp"

namespace qkdpa {

std::vector<std::uint8_t> read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path);
  std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                  std::istreambuf_iterator<char>());
  if (in.bad()) throw Error("cannot read " + path);
  return bytes;
}

void write_file_atomic(const std::string& path,
                       const std::vector<std::uint8_t>& bytes) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot create " + tmp);
    out.write(reinterpret_cast<const char*>(bytes.data()),
              static_cast<std::streamsize>(bytes.size()));
    out.flush();
    if (!out) {
      out.close();
      std::remove(tmp.c_str());
      throw Error("cannot write " + tmp);
    }
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::remove(tmp.c_str());
    throw Error("cannot rename " + tmp + " to " + path + ": " + ec.message());
  }
}

int run_pa(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    {
      // The size ladder is a bench setting; pa sizes come from the input.
      RunConfig own = cfg;
      own.sizes.clear();
      own.validate();
    }
    if (!cfg.in_path) throw ParameterError("pa needs an input file");
    if (!cfg.out_path) throw ParameterError("pa needs an output file");
    if (!cfg.h_min && cfg.enforce) {
      throw ParameterError(
          "pa needs the block min-entropy (h_min) to check the output length");
    }
    const auto input = read_file(*cfg.in_path);
    const std::uint64_t n = cfg.block_bits.value_or(8 * input.size());
    if (n == 0) throw FormatError("input file is empty");
    const std::size_t block_bytes = byte_length(n);
    if (input.size() < block_bytes) {
      throw TruncationError("input holds " + std::to_string(input.size()) +
                            " bytes, one block needs " +
                            std::to_string(block_bytes));
    }
    if (input.size() % block_bytes != 0) {
      throw FormatError("input length " + std::to_string(input.size()) +
                        " is not a whole number of " +
                        std::to_string(block_bytes) + "-byte blocks");
    }
    const std::uint64_t r = cfg.output_bits(n);
    if (r > n) throw ParameterError("output length exceeds block size");

    PAParams params;
    params.n = n;
    params.r = r;
    params.epsilon = cfg.epsilon;
    params.h_min = cfg.h_min.value_or(static_cast<double>(n));
    const SecurityBudget budget = make_budget(params.h_min, params.epsilon, r);
    out << "security budget" << (cfg.enforce ? "" : " (not enforced)") << '\n';
    write_budget(out, budget);
    if (cfg.enforce && !budget.ok) {
      err << "error: output length " << r << " exceeds r_max " << budget.r_max
          << '\n';
      return 2;
    }

    std::optional<HashSeed> fixed;
    if (cfg.seed_c_hex) {
      fixed = HashSeed{BigNat::from_hex(*cfg.seed_c_hex),
                       BigNat::from_hex(*cfg.seed_d_hex), n};
      if (!fixed->valid()) {
        throw ParameterError("fixed seed needs odd c and c, d below 2^" +
                             std::to_string(n));
      }
    }

    PaOptions opts;
    opts.enforce_security = cfg.enforce;
    opts.alg = cfg.alg;
    opts.thresholds = cfg.thresholds;
    const std::size_t blocks = input.size() / block_bytes;
    std::vector<std::uint8_t> output;
    output.reserve(blocks * byte_length(r));
    const std::span<const std::uint8_t> all(input);
    for (std::size_t b = 0; b < blocks; ++b) {
      const BitBlock x =
          import_block(all.subspan(b * block_bytes, block_bytes), n, cfg.order);
      const HashSeed seed = fixed ? *fixed : gen_seed(n, cfg.rng_seed, b);
      const auto key = export_block(pa_round(x, params, seed, opts), cfg.order);
      output.insert(output.end(), key.begin(), key.end());
    }
    write_file_atomic(*cfg.out_path, output);
    out << "blocks       " << blocks << '\n'
        << "bytes out    " << output.size() << '\n';
    return 0;
  } catch (const SecurityBoundError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace qkdpa
