// Copyright 2026 The detpoly authors
// SPDX-License-Identifier: Apache-2.0

#include "cli.hpp"

int main(int argc, char** argv) { return detpoly::cli::run(argc, argv); }
