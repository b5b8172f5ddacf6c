#include <cstdio>

int main() {
    std::puts("oalg: subcommands not wired up yet");
    return 2;
}
