// Copyright 2026 The pcoast Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef PCOAST_BENCH_HPP
#define PCOAST_BENCH_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "pcoast/circuit.hpp"

namespace pcoast {

/// Textbook QFT: H and controlled phases (RZ/CNOT form), then the qubit-reversal swaps.
Circuit bench_qft(std::size_t n);
/// One Grover diffusion operator; the multi-controlled Z is a phase polynomial over all
/// Z-parity rotations, so n is capped at 12.
Circuit bench_grover(std::size_t n);
/// Hardware-efficient ansatz: PrepZ, `layers` of RY/RZ plus a CNOT ladder, final RY/RZ, MeasZ.
Circuit bench_hea(std::size_t n, std::size_t layers, std::uint64_t seed);
/// MaxCut QAOA on a ring with seeded chords: PrepZ, H, p rounds of ZZ(gamma)/RX(2 beta), MeasZ.
Circuit bench_qaoa(std::size_t n, std::size_t rounds, std::uint64_t seed);

struct RandomCircuitOptions {
  double measure_probability = 0.08;
  double prepare_probability = 0.08;
  double two_qubit_probability = 0.3;
};

/// Gates drawn from PrepZ, MeasZ, H, S, Sdg, X, Y, Z, T, Tdg, RX, RY, RZ, CNOT, CZ, SWAP.
Circuit random_circuit(std::size_t n, std::size_t gates, std::uint64_t seed, const RandomCircuitOptions& opt = {});

/// Dispatch by family name: qft, grover, hea, qaoa, random.
Circuit bench_family(const std::string& family, std::size_t n, std::size_t layers, std::size_t gates,
                     std::uint64_t seed);
const std::vector<std::string>& bench_families();

}  // namespace pcoast

#endif  // PCOAST_BENCH_HPP
