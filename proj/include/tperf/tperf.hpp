#pragma once

// Everything at once.
#include "tperf/cli.hpp"
#include "tperf/connectivity.hpp"
#include "tperf/corpus.hpp"
#include "tperf/errors.hpp"
#include "tperf/flow.hpp"
#include "tperf/graph.hpp"
#include "tperf/io.hpp"
#include "tperf/isomorphism.hpp"
#include "tperf/linegraph.hpp"
#include "tperf/oracle.hpp"
#include "tperf/parity.hpp"
#include "tperf/recognizer.hpp"
#include "tperf/report.hpp"
#include "tperf/theta.hpp"
