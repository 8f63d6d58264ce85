#define CATCH_AMALGAMATED_CUSTOM_MAIN
#include <catch2/catch_amalgamated.cpp>

int main(int argc, char* argv[]) { return Catch::Session().run(argc, argv); }
