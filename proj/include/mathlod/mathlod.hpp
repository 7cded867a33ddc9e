#pragma once

#include "mathlod/error.hpp"
#include "mathlod/text.hpp"
#include "mathlod/rdf/term.hpp"
#include "mathlod/rdf/vocab.hpp"
#include "mathlod/rdf/turtle.hpp"
#include "mathlod/rdf/isomorphism.hpp"
#include "mathlod/rdf/semantics.hpp"
#include "mathlod/ontology/ontology.hpp"
#include "mathlod/ontology/schema.hpp"
#include "mathlod/fol/fol.hpp"
#include "mathlod/fol/models.hpp"
#include "mathlod/translator/mapping.hpp"
#include "mathlod/translator/translator.hpp"
#include "mathlod/lexicon/lexicon.hpp"
#include "mathlod/lexicon/llod.hpp"
#include "mathlod/lexicon/phrase.hpp"
#include "mathlod/replenish/replenish.hpp"
