from heckeposet.cli import main

raise SystemExit(main())
