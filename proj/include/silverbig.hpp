#ifndef SILVERBIG_HPP
#define SILVERBIG_HPP

#include "silverbig/big.hpp"
#include "silverbig/certificate.hpp"
#include "silverbig/coloring.hpp"
#include "silverbig/constructions.hpp"
#include "silverbig/decider.hpp"
#include "silverbig/design.hpp"
#include "silverbig/field.hpp"
#include "silverbig/graph.hpp"
#include "silverbig/independence.hpp"
#include "silverbig/io.hpp"
#include "silverbig/parallel_class.hpp"
#include "silverbig/silver.hpp"

#endif
