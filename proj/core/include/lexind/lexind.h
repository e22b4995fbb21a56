#ifndef LEXIND_LEXIND_H_
#define LEXIND_LEXIND_H_

#include "lexind/column_space.h"
#include "lexind/cooccurrence.h"
#include "lexind/corpus.h"
#include "lexind/dictionary.h"
#include "lexind/error.h"
#include "lexind/evaluation.h"
#include "lexind/extraction.h"
#include "lexind/pivot.h"
#include "lexind/similarity.h"
#include "lexind/text.h"

#endif  // LEXIND_LEXIND_H_
