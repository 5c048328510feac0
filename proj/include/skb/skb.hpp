#pragma once

#include "skb/brace.hpp"
#include "skb/caps.hpp"
#include "skb/commutators.hpp"
#include "skb/constructions.hpp"
#include "skb/errors.hpp"
#include "skb/group.hpp"
#include "skb/ideals.hpp"
#include "skb/io.hpp"
#include "skb/ybe.hpp"
