#pragma once

#include "brauerkit/canon_graph.hpp"
#include "brauerkit/cipher/alphabet.hpp"
#include "brauerkit/cipher/bridges.hpp"
#include "brauerkit/cipher/classical.hpp"
#include "brauerkit/cipher/coincidence.hpp"
#include "brauerkit/cipher/friedman.hpp"
#include "brauerkit/config_io.hpp"
#include "brauerkit/configuration.hpp"
#include "brauerkit/error.hpp"
#include "brauerkit/invariants.hpp"
#include "brauerkit/multiset.hpp"
#include "brauerkit/quiver.hpp"
#include "brauerkit/rational.hpp"
#include "brauerkit/score/encode.hpp"
#include "brauerkit/score/note.hpp"
#include "brauerkit/score/parser.hpp"
