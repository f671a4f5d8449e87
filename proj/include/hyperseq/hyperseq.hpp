#pragma once

#include "hyperseq/campaigns.hpp"
#include "hyperseq/errors.hpp"
#include "hyperseq/factorials.hpp"
#include "hyperseq/gaussian.hpp"
#include "hyperseq/json_io.hpp"
#include "hyperseq/orthopoly.hpp"
#include "hyperseq/random.hpp"
#include "hyperseq/rational.hpp"
#include "hyperseq/report.hpp"
#include "hyperseq/selftest.hpp"
#include "hyperseq/sequence.hpp"
#include "hyperseq/series.hpp"
#include "hyperseq/sums.hpp"
#include "hyperseq/transforms.hpp"
