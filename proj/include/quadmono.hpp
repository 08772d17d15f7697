#ifndef QUADMONO_HPP
#define QUADMONO_HPP

#include "quadmono/error.hpp"
#include "quadmono/word.hpp"
#include "quadmono/braid.hpp"
#include "quadmono/parse.hpp"
#include "quadmono/presentation.hpp"
#include "quadmono/monodromy.hpp"
#include "quadmono/van_kampen.hpp"
#include "quadmono/invariants.hpp"
#include "quadmono/io.hpp"

#endif  // QUADMONO_HPP
