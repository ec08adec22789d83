#include <doctest.h>
int cli_dummy;
