#pragma once

// Umbrella header.

#include "cubegray/arc_diagram.hpp"
#include "cubegray/arc_word.hpp"
#include "cubegray/big_count.hpp"
#include "cubegray/connectivity.hpp"
#include "cubegray/convert.hpp"
#include "cubegray/double_occurrence_word.hpp"
#include "cubegray/errors.hpp"
#include "cubegray/gray_code.hpp"
#include "cubegray/involution.hpp"
#include "cubegray/render.hpp"
#include "cubegray/shelling.hpp"
#include "cubegray/signed_permutation.hpp"
#include "cubegray/symmetry.hpp"
#include "cubegray/text_io.hpp"
