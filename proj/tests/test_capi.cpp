#include "qcodes.h"
int main(){ return 0; }
