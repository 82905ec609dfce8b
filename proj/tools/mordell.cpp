// Copyright (c) 2026 the mordell authors
//
// Licensed under the Apache License, Version 2.0 (see LICENSE or
// https://www.apache.org/licenses/LICENSE-2.0).

#include <CLI11.hpp>

#include "mordell/interval.hpp"

int main(int argc, char** argv) {
  CLI::App app{"certified canonical heights and basis certificates for y^2 = x^3 + n"};
  app.require_subcommand(1);
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }
  return 0;
}
