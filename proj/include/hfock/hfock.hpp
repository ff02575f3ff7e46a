#pragma once

#include "abacus.hpp"
#include "core.hpp"
#include "document.hpp"
#include "graph_export.hpp"
#include "heisenberg.hpp"
#include "kashiwara.hpp"
#include "symfun.hpp"
#include "verify.hpp"
