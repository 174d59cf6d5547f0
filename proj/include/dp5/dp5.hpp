#pragma once

#include "dp5/arith.hpp"
#include "dp5/errors.hpp"
#include "dp5/fiber.hpp"
#include "dp5/fixtures.hpp"
#include "dp5/galois.hpp"
#include "dp5/int_matrix.hpp"
#include "dp5/json_io.hpp"
#include "dp5/model.hpp"
#include "dp5/modular.hpp"
#include "dp5/multipoly.hpp"
#include "dp5/number_field.hpp"
#include "dp5/obstruction.hpp"
#include "dp5/picard.hpp"
#include "dp5/residue.hpp"
#include "dp5/verify.hpp"
