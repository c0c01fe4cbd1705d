#pragma once

#include "sumsetlab/bitvec.hpp"
#include "sumsetlab/bounds.hpp"
#include "sumsetlab/decomposition.hpp"
#include "sumsetlab/int_set.hpp"
#include "sumsetlab/io.hpp"
#include "sumsetlab/modular.hpp"
#include "sumsetlab/numbers.hpp"
#include "sumsetlab/residue_set.hpp"
#include "sumsetlab/search.hpp"
#include "sumsetlab/verify.hpp"
