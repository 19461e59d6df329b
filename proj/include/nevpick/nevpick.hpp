// Copyright 2026 The nevpick Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "nevpick/cxnum.hpp"
#include "nevpick/error.hpp"
#include "nevpick/feasibility.hpp"
#include "nevpick/instance.hpp"
#include "nevpick/jets.hpp"
#include "nevpick/kernel.hpp"
#include "nevpick/oracle.hpp"
#include "nevpick/problem.hpp"
