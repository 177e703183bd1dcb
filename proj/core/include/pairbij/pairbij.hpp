#pragma once

#include "pairbij/charpair.hpp"
#include "pairbij/encoders.hpp"
#include "pairbij/errors.hpp"
#include "pairbij/nadic.hpp"
#include "pairbij/nat.hpp"
#include "pairbij/streams.hpp"
