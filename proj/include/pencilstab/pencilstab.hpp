#pragma once

#include "pencilstab/rational.hpp"
#include "pencilstab/monomial.hpp"
#include "pencilstab/homform.hpp"
#include "pencilstab/parser.hpp"
#include "pencilstab/pencil.hpp"
#include "pencilstab/criterion.hpp"
#include "pencilstab/paper_tables.hpp"
#include "pencilstab/normal_forms.hpp"
#include "pencilstab/halphen.hpp"
