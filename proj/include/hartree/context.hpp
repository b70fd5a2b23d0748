// Shared read-only pieces of one discretized problem: lattice, traps,
// assembled potential diagonals, kernel table, and the convolution engine.
#pragma once

#include <memory>
#include <utility>

#include "hartree/convolution.hpp"
#include "hartree/hamiltonian.hpp"
#include "hartree/lattice.hpp"
#include "hartree/potentials.hpp"

namespace hartree {

struct SolverContext {
  LatticeSpec lattice;
  HarmonicPotential trap1;
  HarmonicPotential trap2;
  DiagonalPotential external1;
  DiagonalPotential external2;
  std::shared_ptr<const KernelTable> kernel;
  ConvolutionEngine convolution;
  int threads = 1;
};

inline SolverContext make_context(const LatticeSpec& lat,
                                  const HarmonicPotential& trap1,
                                  const HarmonicPotential& trap2,
                                  const YukawaPotential& interaction,
                                  ConvolutionPath path = ConvolutionPath::direct,
                                  int threads = 1) {
  auto kernel =
      std::make_shared<const KernelTable>(build_kernel_table(interaction, lat));
  ConvolutionEngine engine(kernel, lat, path);
  return SolverContext{lat,
                       trap1,
                       trap2,
                       DiagonalPotential(lat, trap1),
                       DiagonalPotential(lat, trap2),
                       std::move(kernel),
                       std::move(engine),
                       threads};
}

}  // namespace hartree
