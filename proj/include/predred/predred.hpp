#pragma once

#include "predred/adversarial.hpp"
#include "predred/ddmin.hpp"
#include "predred/features.hpp"
#include "predred/grammar.hpp"
#include "predred/harness.hpp"
#include "predred/lexer.hpp"
#include "predred/oracle.hpp"
#include "predred/parse_tree.hpp"
#include "predred/parser.hpp"
#include "predred/perses.hpp"
#include "predred/token.hpp"
#include "predred/trace.hpp"
#include "predred/util.hpp"
