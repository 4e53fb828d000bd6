// Umbrella header for the entropyflow library.

#pragma once

#include "entropyflow/channels/diffusion.hpp"
#include "entropyflow/channels/super_scattering.hpp"
#include "entropyflow/classical/aggregation.hpp"
#include "entropyflow/classical/boxes.hpp"
#include "entropyflow/classical/diffusion.hpp"
#include "entropyflow/classical/entropy.hpp"
#include "entropyflow/classical/flow.hpp"
#include "entropyflow/classical/grid_density.hpp"
#include "entropyflow/classical/probability_vector.hpp"
#include "entropyflow/core/error.hpp"
#include "entropyflow/linalg/complex_matrix.hpp"
#include "entropyflow/linalg/hermitian_eigen.hpp"
#include "entropyflow/linalg/kron.hpp"
#include "entropyflow/linalg/matrix_function.hpp"
#include "entropyflow/linalg/vectorize.hpp"
#include "entropyflow/quantum/coarse_grain.hpp"
#include "entropyflow/quantum/density_matrix.hpp"
#include "entropyflow/quantum/entropy.hpp"
#include "entropyflow/quantum/flow.hpp"
#include "entropyflow/random/sample.hpp"
