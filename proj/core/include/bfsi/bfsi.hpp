#pragma once

#include "bfsi/error.hpp"
#include "bfsi/gram_selector.hpp"
#include "bfsi/hashing.hpp"
#include "bfsi/index.hpp"
#include "bfsi/interleaved_table.hpp"
#include "bfsi/params.hpp"
#include "bfsi/searcher.hpp"
#include "bfsi/verifiers.hpp"
