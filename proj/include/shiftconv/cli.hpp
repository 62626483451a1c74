#pragma once

namespace shiftconv {

// Exit codes: 0 success, 1 verification failure, 2 configuration error.
// Output files go to --out-dir, else $SHIFTCONV_OUTPUT_DIR, else the working directory.
int run_cli(int argc, char** argv);

}  // namespace shiftconv
