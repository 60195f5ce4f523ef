#pragma once

// Umbrella header for the strand streaming assembler and gene finder.

#include "strand/bench.hpp"
#include "strand/boyer_moore.hpp"
#include "strand/codon.hpp"
#include "strand/debruijn.hpp"
#include "strand/fasta.hpp"
#include "strand/genescan.hpp"
#include "strand/kmer.hpp"
#include "strand/overlap.hpp"
#include "strand/sequence.hpp"
#include "strand/serialize.hpp"
#include "strand/simulate.hpp"
#include "strand/stream.hpp"
