#pragma once

#include "multiseg/error.hpp"
#include "multiseg/segment.hpp"
#include "multiseg/multisegment.hpp"
#include "multiseg/io.hpp"
#include "multiseg/poset.hpp"
#include "multiseg/truncation.hpp"
#include "multiseg/permutation.hpp"
#include "multiseg/kazhdan_lusztig.hpp"
#include "multiseg/phi.hpp"
#include "multiseg/symmetrization.hpp"
#include "multiseg/multiplicity.hpp"
#include "multiseg/ring.hpp"
