#pragma once

#define QSYNTH_VERSION "0.1.0"
