#pragma once

#include "delpezzo/rational.hpp"
#include "delpezzo/lattice.hpp"
#include "delpezzo/isometry.hpp"
#include "delpezzo/named.hpp"
#include "delpezzo/cluster.hpp"
#include "delpezzo/configuration.hpp"
#include "delpezzo/lct.hpp"
#include "delpezzo/random.hpp"
#include "delpezzo/properties.hpp"
#include "delpezzo/report.hpp"
#include "delpezzo/witness.hpp"
#include "delpezzo/verify.hpp"
#include "delpezzo/config_io.hpp"
#include "delpezzo/commands.hpp"
