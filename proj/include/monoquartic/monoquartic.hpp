// Umbrella header.
#pragma once

#include "monoquartic/numtheory.hpp"
#include "monoquartic/polyint.hpp"
#include "monoquartic/polymod.hpp"
#include "monoquartic/dedekind.hpp"
#include "monoquartic/galois.hpp"
#include "monoquartic/reciprocal.hpp"
#include "monoquartic/survey.hpp"
