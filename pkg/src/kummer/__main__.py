from kummer.cli import main

raise SystemExit(main())
